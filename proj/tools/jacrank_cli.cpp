#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/report.hpp"

using namespace jacrank;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kDisagree = 3, kBudget = 4 };

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Route> parse_routes(const std::string& s) {
  if (s == "all") return {Route::Criterion, Route::Oracle, Route::Cartier};
  if (auto r = route_from_string(s)) return {*r};
  throw CLI::ValidationError("--route", "expected criterion, oracle, cartier or all");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi sums, character-sum L-polynomials and p-rank tests for cyclic covers"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);

  unsigned threads = 0;
  std::uint64_t max_terms = 1'000'000'000;
  app.add_option("--threads", threads, "Worker threads (default: JACRANK_THREADS or 1)");
  app.add_option("--max-terms", max_terms, "Budget for summation terms")->capture_default_str();

  std::uint64_t m = 0, p = 0;
  int h = 1;
  std::vector<int> a;
  std::string curve_path, template_path, scan = "branch", route = "all";
  std::optional<int> j;
  std::vector<std::int64_t> f;

  auto* jac = app.add_subcommand("jacobi", "Jacobi sum J_(a) with valuations above p");
  jac->add_option("-m", m, "Character order (prime)")->required();
  jac->add_option("-p", p, "Characteristic")->required();
  jac->add_option("-h", h, "Extension degree")->capture_default_str();
  jac->add_option("-a", a, "Exponents a_1,...,a_d")->required()->delimiter(',');

  auto* stick = app.add_subcommand("stickelberger", "d_u table, theta(a), c_h, e_h and orbit sums");
  stick->add_option("-m", m)->required();
  stick->add_option("-p", p)->required();
  stick->add_option("-a", a)->required()->delimiter(',');

  auto* crit = app.add_subcommand("criteria", "Not-supersingular and positive p-rank certificates");
  crit->add_option("-m", m)->required();
  crit->add_option("-p", p)->required();
  crit->add_option("-a", a)->required()->delimiter(',');

  auto* lp = app.add_subcommand("lpoly", "Character-sum L-polynomials P^{chi^j}(t)");
  lp->add_option("--curve", curve_path, "CurveSpec JSON file")->required();
  lp->add_option("-j", j, "Single character power");

  auto* pr = app.add_subcommand("prank", "p-rank verdicts by route");
  pr->add_option("--curve", curve_path, "CurveSpec JSON file")->required();
  pr->add_option("--route", route, "criterion, oracle, cartier or all")->capture_default_str();

  auto* ze = app.add_subcommand("zeta", "Zeta numerator by point counting");
  ze->add_option("--curve", curve_path, "CurveSpec JSON file")->required();

  auto* ca = app.add_subcommand("cartier", "Cartier-Manin matrix of y^2 = f(x) over F_p");
  ca->add_option("-p", p)->required();
  ca->add_option("-f", f, "Coefficients of f, constant first")->required()->delimiter(',');

  auto* de = app.add_subcommand("deuring", "Deuring polynomial mod p and its roots in F_{p^2}");
  de->add_option("-p", p)->required();

  auto* se = app.add_subcommand("search", "Scan branch points for p-rank 0 (TSV)");
  se->add_option("--curve-template", template_path, "CurveSpec JSON with null branch entries")->required();
  se->add_option("--scan", scan, "What to scan")->check(CLI::IsMember({"branch"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunConfig cfg;
  cfg.threads = threads ? threads : threads_from_env();
  cfg.max_terms = max_terms;

  try {
    if (*jac) {
      emit(jacobi_report(m, p, h, a, cfg));
    } else if (*stick) {
      emit(stickelberger_report(m, p, a));
    } else if (*crit) {
      emit(criteria_report(m, p, a));
    } else if (*lp) {
      emit(lpoly_report(load_curve(curve_path), j, cfg));
    } else if (*pr) {
      std::vector<Route> routes;
      try {
        routes = parse_routes(route);
      } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
      }
      auto rep = prank_report(load_curve(curve_path), routes, cfg);
      emit(rep.json);
      if (!rep.agree) return kDisagree;
    } else if (*ze) {
      emit(zeta_report(load_curve(curve_path), cfg));
    } else if (*ca) {
      emit(cartier_report(p, f));
    } else if (*de) {
      emit(deuring_report(p));
    } else if (*se) {
      std::ifstream in(template_path);
      if (!in) fail(ErrorCode::Validation, template_path + ": cannot open");
      Json tmpl;
      try {
        tmpl = Json::parse(in);
      } catch (const nlohmann::json::parse_error& err) {
        fail(ErrorCode::Validation, template_path + ": " + err.what());
      }
      search_branch(tmpl, std::cout, cfg);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    bool budget = err.code() == ErrorCode::BudgetExceeded || err.code() == ErrorCode::DegreeTooLarge;
    return budget ? kBudget : kValidation;
  }
  return kOk;
}
