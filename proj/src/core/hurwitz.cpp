#include "hurwitz.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "error.hpp"

namespace tropitev {

Partition normalize_partition(Partition p) {
  for (int part : p)
    if (part < 1) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

BigInt partition_aut(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p) ++mult[part];
  BigInt out = 1;
  for (auto [part, k] : mult) out *= factorial(k);
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

namespace {

using Perm = std::array<unsigned char, kHurwitzDegreeLimit>;

Partition cycle_type(const Perm& p, int d) {
  Partition out;
  std::array<bool, kHurwitzDegreeLimit> seen{};
  for (int i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

using Classes = std::map<Partition, std::vector<Perm>>;

std::mutex cache_mutex;

const Classes& classes_of_degree(int d) {
  static std::map<int, Classes> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Classes& out = cache[d];
  Perm p{};
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = static_cast<unsigned char>(i);
  do {
    out[cycle_type(p, d)].push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + d));
  return out;
}

bool transitive(const Perm& a, const Perm& b, int d) {
  std::array<int, kHurwitzDegreeLimit> parent{};
  for (int i = 0; i < d; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = d;
  for (const Perm* p : {&a, &b})
    for (int i = 0; i < d; ++i) {
      int x = find(i), y = find((*p)[static_cast<std::size_t>(i)]);
      if (x != y) {
        parent[static_cast<std::size_t>(x)] = y;
        --comps;
      }
    }
  return comps == 1;
}

void check_profiles(const Partition& a, const Partition& b, const Partition& c) {
  int d = partition_size(a);
  if (partition_size(b) != d || partition_size(c) != d)
    fail(ErrorCode::SizeMismatch, to_string(a) + " " + to_string(b) + " " + to_string(c));
  if (d < 1) fail(ErrorCode::InvalidArgument, "empty partition");
  if (d > kHurwitzDegreeLimit)
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(d) + " exceeds " + std::to_string(kHurwitzDegreeLimit));
  int ramification = 3 * d - static_cast<int>(a.size() + b.size() + c.size());
  if (ramification != 2 * d - 2)
    fail(ErrorCode::GenusMismatch, "profiles " + to_string(a) + " " + to_string(b) + " " + to_string(c) +
                                       " have ramification " + std::to_string(ramification) + ", genus 0 needs " +
                                       std::to_string(2 * d - 2));
}

}  // namespace

BigInt transitive_factorizations(const Partition& a0, const Partition& b0, const Partition& c0) {
  Partition a = normalize_partition(a0), b = normalize_partition(b0), c = normalize_partition(c0);
  check_profiles(a, b, c);
  const int d = partition_size(a);
  std::lock_guard<std::mutex> lock(cache_mutex);
  static std::map<std::tuple<Partition, Partition, Partition>, BigInt> memo;
  auto key = std::make_tuple(a, b, c);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Classes& cls = classes_of_degree(d);
  const auto& ca = cls.at(a);
  const Perm& s1 = ca.front();
  long hits = 0;
  Perm s3{};
  for (const Perm& s2 : cls.at(b)) {
    // s3 = (s1 s2)^-1, (s1 s2)(i) = s1(s2(i))
    for (int i = 0; i < d; ++i) s3[s1[s2[static_cast<std::size_t>(i)]]] = static_cast<unsigned char>(i);
    if (cycle_type(s3, d) == c && transitive(s1, s2, d)) ++hits;
  }
  BigInt out = BigInt(hits) * static_cast<unsigned long>(ca.size());
  memo.emplace(key, out);
  return out;
}

Rational triple_hurwitz_marked(const Partition& a, const Partition& b, const Partition& c) {
  BigInt count = transitive_factorizations(a, b, c);
  int d = partition_size(a);
  return make_rational(count * partition_aut(a) * partition_aut(b) * partition_aut(c), factorial(d));
}

Rational local_hurwitz(const LocalVertexProfile& p) {
  if (p.directions.size() != 3)
    fail(ErrorCode::InvalidArgument, "local Hurwitz numbers need 3 directions, got " + std::to_string(p.directions.size()));
  for (const Direction& dir : p.directions)
    if (partition_size(dir.partition) != p.degree)
      fail(ErrorCode::SizeMismatch, to_string(dir.partition) + " is not a partition of " + std::to_string(p.degree));
  Rational h = triple_hurwitz_marked(p.directions[0].partition, p.directions[1].partition, p.directions[2].partition);
  for (const Direction& dir : p.directions)
    for (int k : dir.interchangeable) h /= factorial(k);
  return h;
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::SimpleTransposition: return "SimpleTransposition";
    case VertexClass::Passthrough: return "Passthrough";
    case VertexClass::Unrecognized: return "Unrecognized";
  }
  return "?";
}

VertexClass classify_vertex(const LocalVertexProfile& p) {
  if (p.directions.size() != 3) return VertexClass::Unrecognized;
  const int d = p.degree;
  Rational h;
  try {
    h = local_hurwitz(p);
  } catch (const Error&) {
    return VertexClass::Unrecognized;
  }
  if (h != 1) return VertexClass::Unrecognized;
  Partition full{d}, ones(static_cast<std::size_t>(d), 1);
  int fulls = 0, trivial = 0;
  for (const Direction& dir : p.directions) {
    Partition q = normalize_partition(dir.partition);
    if (q == full) ++fulls;
    else if (q == ones) ++trivial;
  }
  Partition simple{2};
  if (d >= 2) simple.resize(static_cast<std::size_t>(d - 1), 1);
  for (const Direction& dir : p.directions)
    if (dir.branch_leg && d >= 2 && normalize_partition(dir.partition) == simple) return VertexClass::SimpleTransposition;
  if ((d == 1 && fulls == 3) || (d > 1 && fulls == 2 && trivial == 1)) return VertexClass::Passthrough;
  return VertexClass::Unrecognized;
}

}  // namespace tropitev
