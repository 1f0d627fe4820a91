#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "counting.hpp"
#include "multiplicity.hpp"
#include "oracle.hpp"

namespace tropitev {

enum class Format { Text, Json, Csv, Dot };

Format parse_format(std::string_view s);
const char* to_string(Format f);

// one row per solution
std::string solution_table(int g, Format f);
std::string tev_report(const TevelevResult& r, Format f);

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int genus = 0;
  std::vector<VerifyItem> items;
  bool passed() const;
  std::size_t certificates = 0;
};

// inject_fault perturbs one expansion factor of the first solution
VerifyReport run_verify(int g, std::optional<BigInt> base = std::nullopt, bool inject_fault = false);
std::string verify_report(const VerifyReport& r, Format f);

std::string paths_report(int d, Format f);

std::string matrix_report(const SolutionIndex& s, Format f, std::optional<BigInt> base = std::nullopt);

struct OracleSummary {
  OracleResult result;
  std::vector<int> matches;
  std::size_t constructed = 0;
  bool equivalent() const;
};

OracleSummary run_oracle(std::optional<BigInt> base = std::nullopt);
std::string oracle_report(const OracleSummary& s, Format f);

}  // namespace tropitev
