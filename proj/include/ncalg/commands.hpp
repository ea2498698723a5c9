#pragma once

// Workflows behind the ncalg command-line tool. Each returns a RunReport whose
// body is deterministic for fixed inputs; only the timing differs between runs.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ncalg/pgc.hpp"

namespace ncalg {

inline constexpr int report_schema_version = 1;

struct RunReport {
  nlohmann::json body;
  bool ok = false;
  std::int64_t elapsed_us = 0;
  std::string summary;  // human-readable text

  /// body plus the "timing_us" field.
  nlohmann::json to_json() const;
};

/// Builds P_n, orients it under v_n > e_{n-1,n} > ... > v_1 and checks every
/// degree-3 ambiguity. Normal-word counts are reported through max_degree.
RunReport cmd_pn_check(int n, std::size_t max_degree = 8);

/// Dual polynomial by closed form and by clique counting, 1/H(-x), and the
/// normal-word counts of P_n, with an agreement verdict.
RunReport cmd_hilbert(int n, std::size_t cap = 16);

/// Vertex-ordering search on a graph file followed by the PBW check.
RunReport cmd_pgc(const std::string& graph_text, GraphMode mode);

/// Orients a presentation under the given order ("c>b>a") and runs bounded
/// completion up to cap.
RunReport cmd_complete(const std::string& presentation_text, const std::string& order,
                       std::size_t cap);

/// S_3 orbit check for the triple relation on indices i, j, k.
RunReport cmd_s3(int i, int j, int k);

/// pn-check, hilbert and the structural identities for every n in range.
RunReport cmd_report_all(int n_min, int n_max, std::size_t cap);

/// Exact JSON form of an integer: a number when it fits in 64 bits, else a
/// decimal string.
nlohmann::json json_integer(const Integer& z);
nlohmann::json json_word(const Word& w, const Alphabet& alphabet);

/// FNV-1a 64-bit hex digest.
std::string digest(const std::string& text);

}  // namespace ncalg
