#pragma once

#include <string>
#include <vector>

#include "numeric.hpp"

namespace tropitev {

// nonincreasing positive parts
using Partition = std::vector<int>;

Partition normalize_partition(Partition p);
int partition_size(const Partition& p);
// prod over part values of (multiplicity)!
BigInt partition_aut(const Partition& p);
std::string to_string(const Partition& p);

inline constexpr int kHurwitzDegreeLimit = 9;

// Number of (s1, s2, s3) with the given cycle types, s1 s2 s3 = 1, generating a transitive group.
BigInt transitive_factorizations(const Partition& a, const Partition& b, const Partition& c);

// count / d! * prod |Aut(eta)|
Rational triple_hurwitz_marked(const Partition& a, const Partition& b, const Partition& c);

struct Direction {
  Partition partition;
  // sizes of classes of mutually interchangeable unmarked branches
  std::vector<int> interchangeable;
  bool branch_leg = false;
};

struct LocalVertexProfile {
  int degree = 0;
  std::vector<Direction> directions;
};

Rational local_hurwitz(const LocalVertexProfile& p);

enum class VertexClass { SimpleTransposition, Passthrough, Unrecognized };

const char* to_string(VertexClass c);
VertexClass classify_vertex(const LocalVertexProfile& p);

}  // namespace tropitev
