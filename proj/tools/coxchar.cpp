// Command-line front end: characteristic polynomials of weak orders.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxchar/charpoly.hpp"
#include "coxchar/error.hpp"
#include "coxchar/series.hpp"
#include "coxchar/verify.hpp"
#include "coxchar/weak_order.hpp"

using namespace coxchar;

namespace {

// Largest ranks for which `--method auto` also builds the poset.
constexpr int kAutoPosetA = 7;
constexpr int kAutoPosetBD = 5;

struct Request {
  std::string family = "A";
  std::string ranks;
  std::string lower;
  std::optional<std::string> upper;
  std::string method = "auto";
  std::string format = "text";
  int order = 10;
  std::optional<std::uint64_t> cap;
  int max_rank = 62;
  std::string suite = "all";
  int max_a = 5;
  int max_bd = 4;
  bool trivariate = false;
};

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::parse, std::string("bad ") + what + " '" + text + "'");
  return value;
}

// "5", "1..6" or "1-6"
std::vector<int> parse_ranks(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::parse, "missing rank (-n)");
  std::size_t sep = text.find("..");
  std::size_t width = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    width = 1;
  }
  if (sep == std::string::npos) return {parse_int(text, "rank")};
  const int first = parse_int(text.substr(0, sep), "rank");
  const int last = parse_int(text.substr(sep + width), "rank");
  if (last < first) throw Error(ErrorCode::parse, "empty rank range '" + text + "'");
  std::vector<int> out;
  for (int n = first; n <= last; ++n) out.push_back(n);
  return out;
}

int single_rank(const Request& req) {
  const auto r = parse_ranks(req.ranks);
  if (r.size() != 1) throw Error(ErrorCode::parse, "this command takes a single rank");
  return r.front();
}

GeneratorSet parse_set(const std::string& text) {
  GeneratorSet s;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const int i = parse_int(item, "generator index");
    if (i < 0 || i > GeneratorSet::kMaxIndex) throw Error(ErrorCode::range, "generator index out of range: " + item);
    s.insert(i);
  }
  return s;
}

EnumerationBudget budget_for(const Request& req) {
  EnumerationBudget budget;
  if (const char* env = std::getenv("COXCHAR_ENUM_CAP")) budget.max_elements = std::stoull(env);
  if (req.cap) budget.max_elements = *req.cap;
  budget.log = &std::cerr;
  return budget;
}

bool check_method(const std::string& method, std::initializer_list<const char*> allowed) {
  for (const char* m : allowed) {
    if (method == m) return true;
  }
  std::string list;
  for (const char* m : allowed) list += std::string(list.empty() ? "" : ", ") + m;
  throw Error(ErrorCode::parse, "method '" + method + "' not available here (use one of: " + list + ")");
}

// One polynomial, or a table of them for a rank range.
struct Row {
  std::string family;
  int rank;
  IntPolynomial poly;
};

void emit(const std::vector<Row>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << "family,rank,polynomial,degree\n";
    for (const auto& r : rows) {
      std::cout << r.family << ',' << r.rank << ",\"" << r.poly.to_string() << "\"," << r.poly.degree() << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    if (format == "json") {
      std::cout << r.poly.to_json() << '\n';
    } else if (rows.size() > 1) {
      std::cout << r.family << '_' << r.rank << ": " << r.poly.to_string() << '\n';
    } else {
      std::cout << r.poly.to_string() << '\n';
    }
  }
}

// Runs the routes and requires them to agree; the route report goes to stderr.
IntPolynomial agree(const std::string& what, const std::vector<std::pair<std::string, IntPolynomial>>& routes) {
  std::string names;
  bool same = true;
  for (const auto& [name, poly] : routes) {
    names += (names.empty() ? "" : ", ") + name;
    same = same && poly == routes.front().second;
  }
  if (!same) {
    std::string msg = what + ": routes disagree:";
    for (const auto& [name, poly] : routes) msg += " " + name + "=" + poly.to_string() + ";";
    throw Error(ErrorCode::verification, msg);
  }
  std::cerr << what << ": routes " << names << (routes.size() > 1 ? " agree" : "") << '\n';
  return routes.front().second;
}

bool poset_allowed(Family family, int rank) {
  return family == Family::A ? rank <= kAutoPosetA : rank <= kAutoPosetBD;
}

IntPolynomial poset_char_poly(const Request& req, Family family, int rank) {
  if (rank == 0) return IntPolynomial(1);
  const Family eff = (family == Family::B && rank == 1) ? Family::A : family;
  return char_poly_of_poset(WeakOrderPoset::build(model_for(eff), rank, budget_for(req)));
}

IntPolynomial full_interval_decomposed(Family family, int rank) {
  if (rank == 0) return IntPolynomial(1);
  const Family eff = (family == Family::B && rank == 1) ? Family::A : family;
  const Model model = model_for(eff);
  const auto graph = CoxeterGraph::build(eff, rank);
  const auto w0 = longest_element_of_parabolic(model, rank, graph.nodes());
  return char_poly_interval_decomposed(graph, GroupElement::identity(model, rank), w0);
}

Family finite_family(const Request& req) {
  const Family family = parse_family(req.family);
  if (is_affine(family)) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + " is affine; use the 'affine' command");
  }
  return family;
}

int run_charpoly(const Request& req, bool modified) {
  check_method(req.method, {"auto", "poset", "subset", "decompose", "series"});
  const Family family = finite_family(req);
  SubsetOptions opts;
  opts.max_rank = req.max_rank;
  std::vector<Row> rows;
  for (int n : parse_ranks(req.ranks)) {
    const std::string what = std::string(modified ? "modified " : "charpoly ") + std::string(to_string(family)) +
                             "_" + std::to_string(n);
    auto finish = [&](IntPolynomial chi) { return modified ? chi.reversed(longest_length(family, n)) : chi; };
    std::vector<std::pair<std::string, IntPolynomial>> routes;
    const bool series_ok = family != Family::D || n >= 2;
    auto series_route = [&] {
      if (!series_ok) throw Error(ErrorCode::range, "series extraction needs D_n with n >= 2");
      const IntPolynomial hat = extract_modified_charpoly(family, n);
      return modified ? hat : hat.reversed(longest_length(family, n));
    };
    auto subset_route = [&] {
      return modified ? modified_char_poly(family, n, opts) : char_poly_subset_sum(family, n, opts);
    };
    if (req.method == "poset") {
      routes.emplace_back("poset", finish(poset_char_poly(req, family, n)));
    } else if (req.method == "subset") {
      routes.emplace_back("subset", subset_route());
    } else if (req.method == "decompose") {
      routes.emplace_back("decompose", finish(full_interval_decomposed(family, n)));
    } else if (req.method == "series") {
      routes.emplace_back("series", series_route());
    } else {
      // auto: subset sum plus every other route the rank permits
      if (n <= opts.max_rank) routes.emplace_back("subset", subset_route());
      if (series_ok) routes.emplace_back("series", series_route());
      if (poset_allowed(family, n)) routes.emplace_back("poset", finish(poset_char_poly(req, family, n)));
    }
    rows.push_back({std::string(to_string(family)), n, agree(what, routes)});
  }
  emit(rows, req.format);
  return 0;
}

int run_affine(const Request& req) {
  check_method(req.method, {"auto", "direct", "recurrence", "both"});
  const Family family = parse_family(req.family);
  if (!is_affine(family)) throw Error(ErrorCode::range, std::string(to_string(family)) + " is not affine");
  SubsetOptions opts;
  opts.max_rank = req.max_rank;
  std::vector<Row> rows;
  for (int n : parse_ranks(req.ranks)) {
    const std::string label = std::string(to_string(family)) + "_" + std::to_string(n);
    if (req.method == "direct") {
      rows.push_back({std::string(to_string(family)), n, affine_modified_char_poly_direct(family, n, opts)});
    } else if (req.method == "recurrence") {
      rows.push_back({std::string(to_string(family)), n, affine_modified_char_poly_recurrence(family, n)});
    } else if (req.method == "both") {
      const IntPolynomial direct = affine_modified_char_poly_direct(family, n, opts);
      const IntPolynomial recurrence = affine_modified_char_poly_recurrence(family, n);
      const bool same = direct == recurrence;
      if (req.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = std::string(to_string(family));
        j["rank"] = n;
        j["direct"] = nlohmann::ordered_json::parse(direct.to_json());
        j["recurrence"] = nlohmann::ordered_json::parse(recurrence.to_json());
        j["agree"] = same;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << label << " direct:     " << direct.to_string() << '\n'
                  << label << " recurrence: " << recurrence.to_string() << '\n'
                  << label << " agree: " << (same ? "yes" : "no") << '\n';
      }
      if (!same) throw Error(ErrorCode::verification, label + ": direct and recurrence disagree");
    } else {
      std::vector<std::pair<std::string, IntPolynomial>> routes;
      if (n + 1 <= opts.max_rank) routes.emplace_back("direct", affine_modified_char_poly_direct(family, n, opts));
      routes.emplace_back("recurrence", affine_modified_char_poly_recurrence(family, n));
      rows.push_back({std::string(to_string(family)), n, agree("affine " + label, routes)});
    }
  }
  if (req.method != "both") emit(rows, req.format);
  return 0;
}

IntPolynomial poset_descent_class(const Request& req, int n, GeneratorSet lower, GeneratorSet upper) {
  const auto poset = WeakOrderPoset::build(Model::PermA, n, budget_for(req));
  const auto [bottom, top] = descent_class_endpoints(Model::PermA, n, lower, upper);
  return char_poly_of_poset(poset.interval(poset.index_of(bottom), poset.index_of(top)));
}

int run_descent_class(const Request& req) {
  check_method(req.method, {"auto", "decompose", "formula", "poset"});
  const int n = single_rank(req);
  const GeneratorSet lower = parse_set(req.lower);
  const GeneratorSet upper = req.upper ? parse_set(*req.upper) : lower;
  const std::string what = "descent-class A_" + std::to_string(n) + " I=" + lower.to_string() +
                           " J=" + upper.to_string();
  std::vector<std::pair<std::string, IntPolynomial>> routes;
  if (req.method == "decompose") {
    routes.emplace_back("decompose", descent_class_char_poly(n, lower, upper));
  } else if (req.method == "formula") {
    if (!(lower == upper)) throw Error(ErrorCode::range, "the product formula covers pure classes (J = I) only");
    routes.emplace_back("formula", fixed_descent_formula(n, lower));
  } else if (req.method == "poset") {
    routes.emplace_back("poset", poset_descent_class(req, n, lower, upper));
  } else {
    routes.emplace_back("decompose", descent_class_char_poly(n, lower, upper));
    if (lower == upper && n >= 1 && run_profile(n, lower).interior && lower.is_subset_of(GeneratorSet::range(1, n))) {
      routes.emplace_back("formula", fixed_descent_formula(n, lower));
    }
    if (n <= kAutoPosetA) routes.emplace_back("poset", poset_descent_class(req, n, lower, upper));
  }
  emit({{"A", n, agree(what, routes)}}, req.format);
  return 0;
}

int run_alt(const Request& req) {
  check_method(req.method, {"auto", "formula", "decompose", "poset"});
  std::vector<Row> rows;
  for (int n : parse_ranks(req.ranks)) {
    const GeneratorSet alt = alternating_descent_set(n);
    std::vector<std::pair<std::string, IntPolynomial>> routes;
    const bool formula = req.method == "formula" || req.method == "auto";
    if (formula) routes.emplace_back("formula", alternating_char_poly(n));
    if (req.method == "decompose" || req.method == "auto") {
      routes.emplace_back("decompose", descent_class_char_poly(n - 1, alt, alt));
    }
    if (req.method == "poset" || (req.method == "auto" && n - 1 <= kAutoPosetA)) {
      routes.emplace_back("poset", poset_descent_class(req, n - 1, alt, alt));
    }
    rows.push_back({"Alt", n, agree("alt " + std::to_string(n), routes)});
  }
  emit(rows, req.format);
  return 0;
}

int run_series(const Request& req) {
  const Family family = finite_family(req);
  if (req.order < 1) throw Error(ErrorCode::range, "truncation order must be at least 1");
  const auto order = static_cast<std::size_t>(req.order);
  if (req.trivariate) {
    std::cout << series_to_json(series_T(family, order)) << '\n';
    return 0;
  }
  const QSeries s = specialized_series_T(family, order);
  std::vector<Row> rows;
  for (std::size_t n = family == Family::D ? 2 : 0; n < order; ++n) {
    rows.push_back({std::string(to_string(family)), static_cast<int>(n), s[n]});
  }
  if (req.format == "text") {
    for (const auto& r : rows) std::cout << "x^" << r.rank << ": " << r.poly.to_string() << '\n';
  } else {
    emit(rows, req.format);
  }
  return 0;
}

int run_verify(const Request& req) {
  verify::SuiteOptions opts;
  opts.max_a = req.max_a;
  opts.max_bd = req.max_bd;
  const auto results = verify::run_suite(req.suite, opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (req.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      j.push_back({{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    std::cout << j.dump() << '\n';
  } else if (req.format == "csv") {
    std::cout << "check,result,cases\n";
    for (const auto& r : results) std::cout << r.name << ',' << (r.passed ? "pass" : "fail") << ',' << r.cases << '\n';
  } else {
    std::cout << verify::format_table(results);
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

int run_dump(const Request& req) {
  const Family family = finite_family(req);
  const int n = single_rank(req);
  const auto poset = WeakOrderPoset::build(model_for(family), n, budget_for(req));
  if (req.lower.empty() && !req.upper) {
    std::cout << poset.dump();
    return 0;
  }
  const GeneratorSet lower = parse_set(req.lower);
  const GeneratorSet upper = req.upper ? parse_set(*req.upper) : lower;
  const auto [bottom, top] = descent_class_endpoints(model_for(family), n, lower, upper);
  std::cout << poset.interval(poset.index_of(bottom), poset.index_of(top)).dump();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxchar: characteristic polynomials of weak orders on Coxeter groups"};
  app.require_subcommand(1);
  Request req;
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto add_common = [&](CLI::App* sub, bool family) {
    if (family) sub->add_option("-f,--family", req.family, "A, B, D, AffA, AffB, AffC, AffD");
    sub->add_option("--format", req.format, "text, json or csv")->check(CLI::IsMember(formats));
    sub->add_option("--cap", req.cap, "element cap for poset enumeration (env COXCHAR_ENUM_CAP)");
  };

  auto* charpoly = app.add_subcommand("charpoly", "chi_W(q) of the weak order");
  auto* modified = app.add_subcommand("modified", "modified characteristic polynomial chi_hat_W(q)");
  for (auto* sub : {charpoly, modified}) {
    add_common(sub, true);
    sub->add_option("-n,--rank", req.ranks, "rank or range a..b")->required();
    sub->add_option("--method", req.method, "auto, poset, subset, decompose, series");
    sub->add_option("--max-rank", req.max_rank, "largest rank for the subset sum");
  }

  auto* affine = app.add_subcommand("affine", "chi_hat of an affine group");
  add_common(affine, true);
  affine->add_option("-n,--rank", req.ranks, "rank or range a..b")->required();
  affine->add_option("--method", req.method, "auto, direct, recurrence, both");
  affine->add_option("--max-rank", req.max_rank, "largest generator count for the subset sum");

  auto* descent = app.add_subcommand("descent-class", "chi of a type A descent class");
  add_common(descent, false);
  descent->add_option("-n,--rank", req.ranks, "rank n of A_n")->required();
  descent->add_option("-I", req.lower, "required descents, e.g. 2,4");
  descent->add_option("-J", req.upper, "allowed descents (default: I)");
  descent->add_option("--method", req.method, "auto, decompose, formula, poset");

  auto* alt = app.add_subcommand("alt", "chi of the alternating permutations of [n]");
  add_common(alt, false);
  alt->add_option("-n", req.ranks, "n or range a..b")->required();
  alt->add_option("--method", req.method, "auto, formula, decompose, poset");

  auto* series = app.add_subcommand("series", "chi_hat coefficients from the generating function");
  add_common(series, true);
  series->add_option("-N,--order", req.order, "truncation order (exclusive)");
  series->add_flag("--trivariate", req.trivariate, "dump the (x, y, z) series as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "oracle-equivalence suites");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--suite", req.suite, "suite name or 'all'");
  verify_cmd->add_option("--max-a", req.max_a, "largest A rank");
  verify_cmd->add_option("--max-bd", req.max_bd, "largest B / D rank");

  auto* dump = app.add_subcommand("dump", "print a weak order poset (or descent class with -I/-J)");
  add_common(dump, true);
  dump->add_option("-n,--rank", req.ranks, "rank")->required();
  dump->add_option("-I", req.lower, "descent class lower set");
  dump->add_option("-J", req.upper, "descent class upper set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (charpoly->parsed()) return run_charpoly(req, false);
    if (modified->parsed()) return run_charpoly(req, true);
    if (affine->parsed()) return run_affine(req);
    if (descent->parsed()) return run_descent_class(req);
    if (alt->parsed()) return run_alt(req);
    if (series->parsed()) return run_series(req);
    if (verify_cmd->parsed()) return run_verify(req);
    if (dump->parsed()) return run_dump(req);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
