// wexc: command-line front end.
//
//   wexc table   --q <prime> [--max-d <int>] [--format text|json] [--workers N]
//   wexc verdict --group <path> [--format text|json]
//   wexc circdet --q <n> --coeffs a1,a2,... [--method elimination|eigenproduct|norm_factored|all]
//   wexc norm    --q <prime> --coeffs a1,a2,...
//   wexc wm      --m <int> --n <int> [--witness]
//   wexc scan    --q <prime> [--permissive]
//
// verdict exit codes: 0 weakly exceptional, 10 not weakly exceptional,
// 2 invalid group. Other failures exit with 1.

#include "wexc/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitWeaklyExceptional = 0;
constexpr int kExitNotWeaklyExceptional = 10;
constexpr int kExitInvalidGroup = 2;
constexpr int kExitFailure = 1;

std::vector<wexc::BigInt> to_big(const std::vector<long>& v) { return {v.begin(), v.end()}; }

int run_table(std::uint32_t q, std::uint32_t max_d, const std::string& format, unsigned workers) {
  wexc::TableOptions opts;
  opts.workers = workers;
  wexc::ClassificationTable table = wexc::classification_table(q, opts);
  if (max_d != 0) std::erase_if(table.rows, [&](const auto& kv) { return kv.first > max_d; });
  if (format == "json") {
    std::cout << wexc::table_to_json(table) << '\n';
  } else {
    std::cout << wexc::table_to_text(table);
    std::cout << wexc::bound_report_to_text(wexc::bound_report(q, table));
  }
  return 0;
}

int run_verdict(const std::string& path, const std::string& format) {
  std::optional<wexc::MonomialGroup> group;
  try {
    group = wexc::group_validate(wexc::read_group_file(path));
  } catch (const wexc::GroupError& e) {
    if (format == "json") {
      std::cout << wexc::group_error_to_json(e) << '\n';
    } else {
      std::cerr << "invalid group: " << e.what() << '\n';
    }
    return kExitInvalidGroup;
  }
  const wexc::Verdict v = wexc::weak_exceptionality_verdict(*group, 0);
  std::cout << (format == "json" ? wexc::verdict_to_json(*group, v) + "\n" : wexc::verdict_to_text(*group, v));
  return v.weakly_exceptional ? kExitWeaklyExceptional : kExitNotWeaklyExceptional;
}

int run_circdet(std::uint32_t n, const std::vector<long>& coeffs, const std::string& method) {
  if (coeffs.size() != n) throw std::invalid_argument("--coeffs must have exactly q entries");
  const wexc::Circulant c(to_big(coeffs));
  if (method == "all") {
    for (auto m : {wexc::DetMethod::elimination, wexc::DetMethod::eigenproduct, wexc::DetMethod::norm_factored}) {
      std::cout << wexc::to_string(m) << ": ";
      if (m == wexc::DetMethod::norm_factored && !wexc::is_prime(std::uint64_t{n})) {
        std::cout << "n/a (size not prime)\n";
        continue;
      }
      std::cout << wexc::circ_det(c, m).get_str() << '\n';
    }
    return 0;
  }
  std::cout << wexc::circ_det(c, wexc::parse_det_method(method)).get_str() << '\n';
  return 0;
}

int run_norm(std::uint32_t q, const std::vector<long>& coeffs) {
  if (!wexc::is_prime(std::uint64_t{q})) throw std::invalid_argument("--q must be prime");
  if (coeffs.size() != q) throw std::invalid_argument("--coeffs must have exactly q entries");
  const wexc::CyclotomicInt x = wexc::CyclotomicInt::make(q, std::span<const long>(coeffs));
  const wexc::BigInt n = abs(x.norm());
  std::cout << n.get_str();
  if (sgn(n) > 0) std::cout << " = " << wexc::factorize(n).to_string();
  std::cout << '\n';
  return 0;
}

int run_wm(std::uint64_t m, std::uint64_t n, bool witness) {
  const bool member = wexc::w_membership(n, m);
  std::cout << "n=" << n << " in W(" << m << "): " << (member ? "true" : "false") << '\n';
  if (witness) {
    const auto w = wexc::vanishing_sum_search(n, m);
    if (w) {
      std::cout << "witness exponents:";
      for (auto e : w->exponents) std::cout << ' ' << e;
      std::cout << '\n';
    } else {
      std::cout << "no vanishing sum of " << n << " roots of unity of order " << m << '\n';
    }
  }
  return 0;
}

int run_scan(std::uint32_t q, bool permissive) {
  const auto report = wexc::circ_nonvanishing_scan(q, permissive ? wexc::ScanMode::permissive : wexc::ScanMode::strict);
  std::cout << wexc::scan_to_text(report);
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak-exceptionality toolkit for monomial groups in SL(q, C), q prime"};
  app.require_subcommand(1);
  std::string format = "text";

  auto* table = app.add_subcommand("table", "Candidate diagonal-group orders n per degree d");
  std::uint32_t table_q = 0, max_d = 0;
  unsigned workers = 0;
  table->add_option("--q", table_q, "Odd prime dimension")->required();
  table->add_option("--max-d", max_d, "Only print rows with d <= max-d");
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  table->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* verdict = app.add_subcommand("verdict", "Decide weak exceptionality of D x| C_q");
  std::string group_path;
  verdict->add_option("--group", group_path, "Group file {q, m, generators}")->required();
  verdict->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verdict->footer("Applies only to groups of the shape D x| C_q with the standard cyclic shift.");

  auto* circdet = app.add_subcommand("circdet", "Determinant of an integer circulant");
  std::uint32_t circ_n = 0;
  std::vector<long> coeffs;
  std::string method = "elimination";
  circdet->add_option("--q", circ_n, "Matrix size")->required();
  circdet->add_option("--coeffs", coeffs, "First row a1,a2,...")->required()->delimiter(',');
  circdet->add_option("--method", method)
      ->check(CLI::IsMember({"elimination", "eigenproduct", "norm_factored", "all"}));

  auto* norm = app.add_subcommand("norm", "|Res(Phi_q, f)| with its factorization");
  std::uint32_t norm_q = 0;
  std::vector<long> norm_coeffs;
  norm->add_option("--q", norm_q, "Prime order")->required();
  norm->add_option("--coeffs", norm_coeffs, "a1,a2,...")->required()->delimiter(',');

  auto* wm = app.add_subcommand("wm", "Vanishing sums of roots of unity");
  std::uint64_t wm_m = 0, wm_n = 0;
  bool want_witness = false;
  wm->add_option("--m", wm_m, "Root-of-unity order (>= 2)")->required();
  wm->add_option("--n", wm_n, "Number of summands")->required();
  wm->add_flag("--witness", want_witness, "Also search for an explicit vanishing sum");

  auto* scan = app.add_subcommand("scan", "Exhaustive nonvanishing check of circulant determinants");
  std::uint32_t scan_q = 0;
  bool permissive = false;
  scan->add_option("--q", scan_q, "Prime size (<= 11)")->required();
  scan->add_flag("--permissive", permissive, "Allow composite sizes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return run_table(table_q, max_d, format, workers);
    if (*verdict) return run_verdict(group_path, format);
    if (*circdet) return run_circdet(circ_n, coeffs, method);
    if (*norm) return run_norm(norm_q, norm_coeffs);
    if (*wm) return run_wm(wm_m, wm_n, want_witness);
    if (*scan) return run_scan(scan_q, permissive);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
