#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ducci/closed_form.hpp"
#include "ducci/cycle.hpp"

namespace ducci {

enum class Agreement { Yes, No, BudgetExceeded };

std::string to_string(Agreement a);

/// One verified (n, m) cell: the closed-form value against the brute-force
/// computation, with budget accounting.
struct SweepRecord {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  CaseId case_id = CaseId::Case1;
  std::uint64_t formula_value = 0;
  BoundKind formula_kind = BoundKind::Exact;
  std::optional<std::uint64_t> computed_len;
  std::optional<std::uint64_t> computed_per;
  Agreement agrees = Agreement::Yes;
  std::optional<bool> conjecture_equality;  // bound rows that completed
  std::uint64_t steps_used = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

enum class SweepFilter { All, PrimePowerGcf, Coprime };

struct SweepConfig {
  std::uint32_t n_min = 2;   // rounded up to even
  std::uint32_t n_max = 16;  // desk-scale default
  std::uint32_t m_min = 2;
  std::uint32_t m_max = 30;
  Budget budget;
  std::string output_path;  // CSV; empty disables persistence
  std::string jsonl_path;   // optional JSON-lines mirror
  SweepFilter filter = SweepFilter::All;
  unsigned jobs = 1;
};

/// Runs the closed-form-vs-computed sweep over the configured grid. Cells
/// already present in the output file are loaded, not recomputed; new rows
/// are appended in (n, m) order as they complete. A cell that outruns the
/// budget yields agrees=budget-exceeded, never an aborted sweep.
std::vector<SweepRecord> sweep_theorem1(const SweepConfig& cfg);

// CSV persistence (column order is fixed; see sweep_csv_header).
std::string sweep_csv_header();
std::string to_csv(const SweepRecord& rec);
std::string to_jsonl(const SweepRecord& rec);
SweepRecord sweep_record_from_csv(const std::string& line);
std::vector<SweepRecord> load_sweep_csv(const std::string& path);

struct LemmaGridConfig {
  std::vector<std::uint32_t> primes{2, 3, 5};
  std::uint32_t k_max = 3;
  std::vector<std::uint32_t> n1_set{2, 3, 4, 5};
  std::uint32_t c_max = 6;
};

/// Aggregated lemma verification over a (p, k, n1, c) grid. Cells whose
/// hypotheses fail are skipped with a note rather than counted as failures.
struct LemmaGridReport {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> failures;  // one line per failing cell
  std::vector<std::string> notes;     // one line per skipped cell

  bool all_pass() const { return failed == 0; }
};

LemmaGridReport verify_all_lemmas(const LemmaGridConfig& cfg = {});

}  // namespace ducci
