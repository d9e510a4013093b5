#include "ducci/sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "ducci/coeff.hpp"

namespace ducci {

namespace {

CaseId case_from_string(const std::string& s) {
  if (s == "1") return CaseId::Case1;
  if (s == "2") return CaseId::Case2;
  if (s == "3") return CaseId::Case3;
  if (s == "4") return CaseId::Case4;
  if (s == "odd-n") return CaseId::OddN;
  throw ParseError("unknown case id '" + s + "'");
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad decimal field '" + s + "'");
  }
  return std::stoull(s);
}

// Computes one sweep cell. Never throws for budget exhaustion.
SweepRecord run_cell(std::uint32_t n, std::uint32_t m, const Budget& budget) {
  SweepRecord rec;
  rec.n = n;
  rec.m = m;
  const LBoundResult formula = l_formula(n, m);
  rec.case_id = formula.case_id;
  rec.formula_value = formula.value;
  rec.formula_kind = formula.kind;
  try {
    const CycleInfo info = lp_values(n, m, budget);
    rec.computed_len = info.len;
    rec.computed_per = info.per;
    rec.steps_used = info.steps_used;
    if (formula.kind == BoundKind::Exact) {
      rec.agrees = info.len == formula.value ? Agreement::Yes : Agreement::No;
    } else {
      rec.agrees = info.len <= formula.value ? Agreement::Yes : Agreement::No;
      rec.conjecture_equality = info.len == formula.value;
    }
  } catch (const BudgetExceeded& e) {
    rec.agrees = Agreement::BudgetExceeded;
    rec.steps_used = e.steps_used;
  }
  return rec;
}

bool cell_selected(std::uint32_t n, std::uint32_t m, SweepFilter filter) {
  if (filter == SweepFilter::All) return true;
  const PrimePowerSplit split = split_prime_common(n, m);
  if (filter == SweepFilter::Coprime) return split.pairs.empty();
  return split.pairs.size() == 1;  // gcf is a power of one prime
}

}  // namespace

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Yes: return "yes";
    case Agreement::No: return "no";
    case Agreement::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string sweep_csv_header() {
  return "n,m,case,formula,kind,computed_L,computed_P,agrees,"
         "conjecture_equality,steps_used";
}

std::string to_csv(const SweepRecord& rec) {
  std::string out;
  out += std::to_string(rec.n) + "," + std::to_string(rec.m) + ",";
  out += to_string(rec.case_id) + "," + std::to_string(rec.formula_value) +
         "," + to_string(rec.formula_kind) + ",";
  if (rec.computed_len) out += std::to_string(*rec.computed_len);
  out += ",";
  if (rec.computed_per) out += std::to_string(*rec.computed_per);
  out += ",";
  out += to_string(rec.agrees) + ",";
  if (rec.conjecture_equality) out += *rec.conjecture_equality ? "yes" : "no";
  out += "," + std::to_string(rec.steps_used);
  return out;
}

std::string to_jsonl(const SweepRecord& rec) {
  nlohmann::json j;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["case"] = to_string(rec.case_id);
  j["formula"] = rec.formula_value;
  j["kind"] = to_string(rec.formula_kind);
  if (rec.computed_len) j["computed_L"] = *rec.computed_len;
  if (rec.computed_per) j["computed_P"] = *rec.computed_per;
  j["agrees"] = to_string(rec.agrees);
  if (rec.conjecture_equality) j["conjecture_equality"] = *rec.conjecture_equality;
  j["steps_used"] = rec.steps_used;
  return j.dump();
}

SweepRecord sweep_record_from_csv(const std::string& line) {
  const auto fields = split_fields(line, ',');
  if (fields.size() != 10) {
    throw ParseError("expected 10 CSV fields, got " +
                     std::to_string(fields.size()));
  }
  SweepRecord rec;
  rec.n = static_cast<std::uint32_t>(parse_u64(fields[0]));
  rec.m = static_cast<std::uint32_t>(parse_u64(fields[1]));
  rec.case_id = case_from_string(fields[2]);
  rec.formula_value = parse_u64(fields[3]);
  if (fields[4] == "exact") {
    rec.formula_kind = BoundKind::Exact;
  } else if (fields[4] == "bound") {
    rec.formula_kind = BoundKind::UpperBound;
  } else {
    throw ParseError("unknown kind '" + fields[4] + "'");
  }
  if (!fields[5].empty()) rec.computed_len = parse_u64(fields[5]);
  if (!fields[6].empty()) rec.computed_per = parse_u64(fields[6]);
  if (fields[7] == "yes") {
    rec.agrees = Agreement::Yes;
  } else if (fields[7] == "no") {
    rec.agrees = Agreement::No;
  } else if (fields[7] == "budget-exceeded") {
    rec.agrees = Agreement::BudgetExceeded;
  } else {
    throw ParseError("unknown agreement '" + fields[7] + "'");
  }
  if (!fields[8].empty()) rec.conjecture_equality = fields[8] == "yes";
  rec.steps_used = parse_u64(fields[9]);
  return rec;
}

std::vector<SweepRecord> load_sweep_csv(const std::string& path) {
  std::vector<SweepRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line == sweep_csv_header()) {
      first = false;
      continue;
    }
    first = false;
    records.push_back(sweep_record_from_csv(line));
  }
  return records;
}

std::vector<SweepRecord> sweep_theorem1(const SweepConfig& cfg) {
  // Enumerate the grid (even n only), minus cells already on disk.
  std::set<std::pair<std::uint32_t, std::uint32_t>> done;
  std::vector<SweepRecord> existing;
  if (!cfg.output_path.empty()) {
    existing = load_sweep_csv(cfg.output_path);
    for (const auto& rec : existing) done.emplace(rec.n, rec.m);
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  std::set<std::pair<std::uint32_t, std::uint32_t>> in_grid;
  for (std::uint32_t n = cfg.n_min + (cfg.n_min % 2); n <= cfg.n_max; n += 2) {
    for (std::uint32_t m = cfg.m_min; m <= cfg.m_max; ++m) {
      if (!cell_selected(n, m, cfg.filter)) continue;
      in_grid.emplace(n, m);
      if (!done.contains({n, m})) cells.emplace_back(n, m);
    }
  }

  std::vector<SweepRecord> fresh(cells.size());
  if (!cells.empty()) {
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        fresh[i] = run_cell(cells[i].first, cells[i].second, cfg.budget);
      }
    } else {
      // Worker pool over independent cells; results land by index so the
      // writer below still emits rows in (n, m) order.
      std::mutex mu;
      std::size_t next = 0;
      auto worker = [&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard lock(mu);
            if (next == cells.size()) return;
            i = next++;
          }
          fresh[i] = run_cell(cells[i].first, cells[i].second, cfg.budget);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  if (!cfg.output_path.empty() && !fresh.empty()) {
    const bool new_file = !std::filesystem::exists(cfg.output_path) ||
                          std::filesystem::file_size(cfg.output_path) == 0;
    std::ofstream out(cfg.output_path, std::ios::app);
    if (!out) {
      throw OutputUnwritable("cannot open " + cfg.output_path);
    }
    if (new_file) out << sweep_csv_header() << "\n";
    for (const auto& rec : fresh) out << to_csv(rec) << "\n";
    if (!out) throw OutputUnwritable("write failed on " + cfg.output_path);
  }
  if (!cfg.jsonl_path.empty() && !fresh.empty()) {
    std::ofstream out(cfg.jsonl_path, std::ios::app);
    if (!out) throw OutputUnwritable("cannot open " + cfg.jsonl_path);
    for (const auto& rec : fresh) out << to_jsonl(rec) << "\n";
  }

  // Full record set for the requested grid, in (n, m) order. Rows the file
  // carries for other grids are left alone and not returned.
  std::vector<SweepRecord> all;
  all.reserve(in_grid.size());
  for (const auto& rec : existing) {
    if (in_grid.contains({rec.n, rec.m})) all.push_back(rec);
  }
  for (const auto& rec : fresh) all.push_back(rec);
  std::sort(all.begin(), all.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::pair(a.n, a.m) < std::pair(b.n, b.m);
  });
  return all;
}

LemmaGridReport verify_all_lemmas(const LemmaGridConfig& cfg) {
  LemmaGridReport report;

  auto record = [&](const std::string& cell, const Report& rep) {
    if (rep.pass) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back(cell + ": " + rep.counterexample);
    }
  };

  for (std::uint32_t p : cfg.primes) {
    for (std::uint32_t k = 1; k <= cfg.k_max; ++k) {
      const std::string base =
          "p=" + std::to_string(p) + " k=" + std::to_string(k);
      record(base + " alt-sign", verify_binom_lemmas(p, k, BinomLemma::AltSign));
      if (p == 2 || k == 1) {
        ++report.skipped;
        report.notes.push_back(base + " gap-pattern: needs odd p and k > 1");
      } else {
        record(base + " gap-pattern",
               verify_binom_lemmas(p, k, BinomLemma::GapPattern));
      }
      record(base + " chu-vandermonde",
             verify_binom_lemmas(p, k, BinomLemma::ChuVandermonde));
    }
  }

  for (std::uint32_t p : cfg.primes) {
    for (std::uint32_t k = 1; k <= cfg.k_max; ++k) {
      for (std::uint32_t n1 : cfg.n1_set) {
        const std::string base = "p=" + std::to_string(p) +
                                 " k=" + std::to_string(k) +
                                 " n1=" + std::to_string(n1);
        if (n1 < 2 || n1 % p == 0) {
          ++report.skipped;
          report.notes.push_back(base + ": needs n1 > 1 with p not dividing n1");
          continue;
        }
        for (std::uint32_t c = 1; c <= cfg.c_max; ++c) {
          const std::string cell = base + " c=" + std::to_string(c);
          record(cell + " vanishing",
                 verify_coeff_lemmas(p, k, n1, c, CoeffLemma::Vanishing));
          record(cell + " smaller-n",
                 verify_coeff_lemmas(p, k, n1, c, CoeffLemma::SmallerN));
        }
      }
    }
  }
  return report;
}

}  // namespace ducci
