#include "coxchar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "coxchar/charpoly.hpp"
#include "coxchar/error.hpp"
#include "coxchar/series.hpp"
#include "coxchar/weak_order.hpp"

namespace coxchar::verify {

namespace {

std::string group_name(Model model, int rank) {
  return std::string(to_string(family_for(model))) + "_" + std::to_string(rank);
}

// Collects the first failure and times the check.
class Recorder {
public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  template <class F>
  void expect_lazy(bool ok, F describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<GeneratorSet> all_subsets(GeneratorSet s) {
  std::vector<GeneratorSet> out;
  const auto members = s.to_vector();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
    GeneratorSet t;
    for (std::size_t b = 0; b < members.size(); ++b) {
      if ((m >> b) & 1U) t.insert(members[b]);
    }
    out.push_back(t);
  }
  return out;
}

// Characteristic polynomial of [u, w] straight from the poset.
IntPolynomial poset_interval_poly(const WeakOrderPoset& poset, Index u, Index w) {
  return char_poly_of_poset(poset.interval(u, w));
}

IntPolynomial poset_descent_class_poly(const WeakOrderPoset& poset, GeneratorSet lower, GeneratorSet upper) {
  const auto [bottom, top] = descent_class_endpoints(poset.model(), poset.rank(), lower, upper);
  return poset_interval_poly(poset, poset.index_of(bottom), poset.index_of(top));
}

std::string mismatch(const IntPolynomial& a, const IntPolynomial& b) { return a.to_string() + " vs " + b.to_string(); }

template <class F>
void guarded(Recorder& rec, const std::string& context, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    rec.expect(false, context + ": " + e.what());
  }
}

} // namespace

CheckResult mobius(Model model, int rank) {
  Recorder rec("mobius " + group_name(model, rank));
  guarded(rec, "mobius", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    for (Index u = 0; u < poset.size(); ++u) {
      const MobiusTable table = mobius_from(poset.order(), u);
      for (Index w : poset.order().upper_set(u)) {
        const int closed = mobius_closed_form(poset, u, w);
        rec.expect_lazy(closed == table[w], [&] {
          return "mu(" + poset.element(u).to_string() + ", " + poset.element(w).to_string() +
                 "): closed " + std::to_string(closed) + " vs recursive " + std::to_string(table[w]);
        });
      }
    }
  });
  return rec.finish();
}

CheckResult interval_decomposition(Model model, int rank, int samples, std::uint64_t seed) {
  Recorder rec("interval " + group_name(model, rank));
  guarded(rec, "interval", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    const CoxeterGraph graph = CoxeterGraph::build(family_for(model), rank);
    std::vector<std::pair<Index, Index>> pairs;
    for (Index u = 0; u < poset.size(); ++u) {
      for (Index w : poset.order().upper_set(u)) pairs.emplace_back(u, w);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int i = 0; i < samples; ++i) {
      const auto [u, w] = pairs[pick(rng)];
      const IntPolynomial oracle = poset_interval_poly(poset, u, w);
      const IntPolynomial decomposed = char_poly_interval_decomposed(graph, poset.element(u), poset.element(w));
      rec.expect_lazy(oracle == decomposed, [&] {
        return "[" + poset.element(u).to_string() + ", " + poset.element(w).to_string() + "]: " +
               mismatch(decomposed, oracle);
      });
    }
  });
  return rec.finish();
}

CheckResult descent_classes(Model model, int rank) {
  Recorder rec("descent-class " + group_name(model, rank));
  guarded(rec, "descent-class", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    const CoxeterGraph graph = CoxeterGraph::build(family_for(model), rank);
    const GeneratorSet all = graph.nodes();
    for (GeneratorSet upper : all_subsets(all)) {
      for (GeneratorSet lower : all_subsets(upper)) {
        const auto filtered = descent_class(poset, lower, upper);
        const auto [bottom, top] = descent_class_endpoints(model, rank, lower, upper);
        const auto interval = poset.order().interval(poset.index_of(bottom), poset.index_of(top));
        rec.expect(filtered == interval, "I=" + lower.to_string() + " J=" + upper.to_string() +
                                             ": filtered class differs from the interval");
        const GeneratorSet from_group = right_descents(multiply(top, inverse(bottom)));
        const GeneratorSet from_graph = (upper | neighbors_in_graph(graph, lower)) - lower;
        rec.expect(from_group == from_graph, "I=" + lower.to_string() + " J=" + upper.to_string() +
                                                 ": D_R " + from_group.to_string() + " vs " +
                                                 from_graph.to_string());
      }
    }
  });
  return rec.finish();
}

CheckResult descent_class_polynomials(int rank) {
  Recorder rec("descent-class-poly A_" + std::to_string(rank));
  guarded(rec, "descent-class-poly", [&] {
    const auto poset = WeakOrderPoset::build(Model::PermA, rank);
    for (GeneratorSet upper : all_subsets(GeneratorSet::range(1, rank))) {
      for (GeneratorSet lower : all_subsets(upper)) {
        const IntPolynomial oracle = poset_descent_class_poly(poset, lower, upper);
        const IntPolynomial route = descent_class_char_poly(rank, lower, upper);
        rec.expect_lazy(oracle == route, [&] {
          return "I=" + lower.to_string() + " J=" + upper.to_string() + ": " + mismatch(route, oracle);
        });
      }
    }
  });
  return rec.finish();
}

CheckResult fixed_descent(int max_rank) {
  Recorder rec("fixed-descent A_n, n<=" + std::to_string(max_rank));
  guarded(rec, "fixed-descent", [&] {
    for (int n = 1; n <= max_rank; ++n) {
      const auto poset = WeakOrderPoset::build(Model::PermA, n);
      for (GeneratorSet descents : all_subsets(GeneratorSet::range(1, n))) {
        if (!run_profile(n, descents).interior) continue;
        const IntPolynomial formula = fixed_descent_formula(n, descents);
        const IntPolynomial general = descent_class_char_poly(n, descents, descents);
        const IntPolynomial oracle = poset_descent_class_poly(poset, descents, descents);
        rec.expect_lazy(formula == general && general == oracle, [&] {
          return "n=" + std::to_string(n) + " I=" + descents.to_string() + ": formula " + formula.to_string() +
                 ", general " + general.to_string() + ", poset " + oracle.to_string();
        });
      }
    }
    // Boundary case: the run {1, 2} of [3] \ {3} touches 1.
    const GeneratorSet boundary{3};
    const IntPolynomial expected({{2, 1}, {1, -1}});
    const IntPolynomial general = descent_class_char_poly(3, boundary, boundary);
    rec.expect(general == expected, "n=3 I={3}: general route gave " + general.to_string());
    const auto poset3 = WeakOrderPoset::build(Model::PermA, 3);
    rec.expect(poset_descent_class_poly(poset3, boundary, boundary) == expected, "n=3 I={3}: poset disagrees");
    bool refused = false;
    try {
      (void)fixed_descent_formula(3, boundary);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::interior_condition;
    }
    rec.expect(refused, "n=3 I={3}: formula route did not raise interior-condition");
  });
  return rec.finish();
}

CheckResult alternating(int min_n, int max_n) {
  Recorder rec("alternating " + std::to_string(min_n) + ".." + std::to_string(max_n));
  guarded(rec, "alternating", [&] {
    for (int n = min_n; n <= max_n; ++n) {
      const auto poset = WeakOrderPoset::build(Model::PermA, n - 1);
      const GeneratorSet alt = alternating_descent_set(n);
      // The descent class must be exactly the up-down permutations.
      const auto members = descent_class(poset, alt, alt);
      std::size_t up_down = 0;
      for (Index i = 0; i < poset.size(); ++i) {
        const auto& w = poset.element(i);
        bool ok = true;
        for (int p = 0; p + 1 < n; ++p) ok = ok && ((p % 2 == 0) ? w[p] < w[p + 1] : w[p] > w[p + 1]);
        if (ok) {
          ++up_down;
          rec.expect(std::binary_search(members.begin(), members.end(), i),
                     "n=" + std::to_string(n) + ": " + w.to_string() + " missing from the descent class");
        }
      }
      rec.expect(up_down == members.size(), "n=" + std::to_string(n) + ": descent class has extra elements");
      const IntPolynomial oracle = poset_descent_class_poly(poset, alt, alt);
      const IntPolynomial formula = alternating_char_poly(n);
      rec.expect_lazy(oracle == formula,
                      [&] { return "n=" + std::to_string(n) + ": " + mismatch(formula, oracle); });
    }
  });
  return rec.finish();
}

CheckResult generating_functions(int max_brute, int max_extract) {
  Recorder rec("genfun brute<=" + std::to_string(max_brute) + " extract<=" + std::to_string(max_extract));
  guarded(rec, "genfun", [&] {
    const std::size_t order = static_cast<std::size_t>(std::max(max_brute, max_extract)) + 2;
    for (Family family : {Family::A, Family::B, Family::D}) {
      const std::string f(to_string(family));
      const TrivariateSeries t = series_T(family, order);
      const TrivariateSeries denominator = series_denominator(order);
      rec.expect(t * denominator == series_numerator(family, order), "T_" + f + " * (1 - xP) != numerator");
      rec.expect(denominator * denominator.reciprocal() == TrivariateSeries::one(order),
                 "(1 - xP) * reciprocal != 1");
      const int lowest = family == Family::D ? 2 : 0;
      if (family == Family::D) rec.expect(t[0].is_zero() && t[1].is_zero(), "T_D has x^0 or x^1 terms");
      for (int n = lowest; n <= max_brute; ++n) {
        rec.expect_lazy(count_subsets_brute(family, n) == t[static_cast<std::size_t>(n)], [&] {
          return "x^" + std::to_string(n) + " of T_" + f + ": " + t[static_cast<std::size_t>(n)].to_string() +
                 " vs brute " + count_subsets_brute(family, n).to_string();
        });
      }
      for (int n = lowest; n <= max_extract; ++n) {
        const IntPolynomial extracted = extract_modified_charpoly(family, n);
        const IntPolynomial subset = modified_char_poly(family, n);
        rec.expect_lazy(extracted == subset,
                        [&] { return f + "_" + std::to_string(n) + ": " + mismatch(extracted, subset); });
        const IntPolynomial reversed = char_poly_subset_sum(family, n).reversed(longest_length(family, n));
        rec.expect_lazy(reversed == subset, [&] {
          return f + "_" + std::to_string(n) + ": q^l(w0) chi(1/q) = " + mismatch(reversed, subset);
        });
      }
    }
  });
  return rec.finish();
}

CheckResult affine(int max_rank) {
  Recorder rec("affine n<=" + std::to_string(max_rank));
  guarded(rec, "affine", [&] {
    for (Family family : {Family::AffA, Family::AffB, Family::AffC, Family::AffD}) {
      for (int n = min_rank(family); n <= max_rank; ++n) {
        const IntPolynomial direct = affine_modified_char_poly_direct(family, n);
        const IntPolynomial recurrence = affine_modified_char_poly_recurrence(family, n);
        rec.expect_lazy(direct == recurrence, [&] {
          return std::string(to_string(family)) + "_" + std::to_string(n) + ": " + mismatch(direct, recurrence);
        });
        // chi_hat(1) = sum over proper subsets of (-1)^|J| = -(-1)^{|S|}
        const BigInt expected = (n + 1) % 2 == 0 ? -1 : 1;
        rec.expect(direct.evaluate(1) == expected,
                   std::string(to_string(family)) + "_" + std::to_string(n) + ": value at 1 is not +-1");
      }
    }
    const IntPolynomial a2({{0, 1}, {1, -3}, {3, 3}});
    const IntPolynomial c2({{0, 1}, {1, -3}, {2, 1}, {4, 2}});
    for (auto route : {affine_modified_char_poly_direct(Family::AffA, 2),
                       affine_modified_char_poly_recurrence(Family::AffA, 2)}) {
      rec.expect(route == a2, "AffA_2 spot value: " + route.to_string());
    }
    for (auto route : {affine_modified_char_poly_direct(Family::AffC, 2),
                       affine_modified_char_poly_recurrence(Family::AffC, 2)}) {
      rec.expect(route == c2, "AffC_2 spot value: " + route.to_string());
    }
  });
  return rec.finish();
}

CheckResult lattice(Model model, int rank) {
  Recorder rec("lattice " + group_name(model, rank));
  guarded(rec, "lattice", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    for (Index x = 0; x < poset.size(); ++x) {
      for (Index y = x; y < poset.size(); ++y) {
        bool ok = true;
        try {
          const Index j = join(poset, x, y);
          ok = poset.leq(x, j) && poset.leq(y, j);
        } catch (const Error&) {
          ok = false;
        }
        rec.expect_lazy(ok, [&] {
          return "no join for " + poset.element(x).to_string() + ", " + poset.element(y).to_string();
        });
      }
    }
    const auto subsets = all_subsets(GeneratorSet::range(1, rank));
    std::vector<Index> parabolic;
    for (GeneratorSet s : subsets) parabolic.push_back(poset.index_of(longest_element_of_parabolic(model, rank, s)));
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        const Index expected = poset.index_of(longest_element_of_parabolic(model, rank, subsets[a] | subsets[b]));
        rec.expect(join(poset, parabolic[a], parabolic[b]) == expected,
                   "join(w0(" + subsets[a].to_string() + "), w0(" + subsets[b].to_string() + ")) != w0(union)");
      }
    }
    // The greatest parabolic longest element below w, found by search.
    for (Index w = 0; w < poset.size(); ++w) {
      std::optional<Index> best;
      for (Index p : parabolic) {
        if (poset.leq(p, w) && (!best || poset.rank_of(p) > poset.rank_of(*best))) best = p;
      }
      bool greatest = best.has_value();
      for (Index p : parabolic) {
        if (greatest && poset.leq(p, w)) greatest = poset.leq(p, *best);
      }
      rec.expect(greatest && max_parabolic_below(poset, w) == *best,
                 "max parabolic below " + poset.element(w).to_string());
    }
  });
  return rec.finish();
}

CheckResult lower_intervals(Model model, int rank) {
  Recorder rec("lower-interval " + group_name(model, rank));
  guarded(rec, "lower-interval", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    for (Index u = 0; u < poset.size(); ++u) {
      for (Index w : poset.order().upper_set(u)) {
        rec.expect_lazy(lower_interval_isomorphism_check(poset, u, w), [&] {
          return "[" + poset.element(u).to_string() + ", " + poset.element(w).to_string() + "]";
        });
      }
    }
  });
  return rec.finish();
}

CheckResult products() {
  Recorder rec("product A_1xA_2, A_2xA_2");
  guarded(rec, "product", [&] {
    const auto a1 = WeakOrderPoset::build(Model::PermA, 1);
    const auto a2 = WeakOrderPoset::build(Model::PermA, 2);
    for (const auto& [p, q] : {std::pair{&a1, &a2}, std::pair{&a2, &a2}}) {
      const ProductPoset prod = product(p->order(), q->order());
      const IntPolynomial lhs = char_poly_of_poset(prod.poset);
      const IntPolynomial rhs = char_poly_of_poset(*p) * char_poly_of_poset(*q);
      rec.expect(lhs == rhs, "A_" + std::to_string(p->rank()) + "xA_" + std::to_string(q->rank()) + ": " +
                                 mismatch(lhs, rhs));
      const IntPolynomial subset = char_poly_subset_sum(Family::A, p->rank()) * char_poly_subset_sum(Family::A, q->rank());
      rec.expect(lhs == subset, "product disagrees with subset sums");
      rec.expect(prod.poset.size() == p->size() * q->size(), "product size");
    }
  });
  return rec.finish();
}

CheckResult lengths(Model model, int rank) {
  Recorder rec("length " + group_name(model, rank));
  guarded(rec, "length", [&] {
    const auto poset = WeakOrderPoset::build(model, rank);
    rec.expect(poset.size() == group_order(model, rank), "group order " + std::to_string(poset.size()));
    for (Index i = 0; i < poset.size(); ++i) {
      const auto& w = poset.element(i);
      rec.expect_lazy(length(w) == poset.rank_of(i), [&] {
        return w.to_string() + ": length " + std::to_string(length(w)) + " vs depth " +
               std::to_string(poset.rank_of(i));
      });
      rec.expect(left_descents(w) == right_descents(inverse(w)), w.to_string() + ": D_L(w) != D_R(w^-1)");
    }
  });
  return rec.finish();
}

CheckResult four_way(Model model, int rank) {
  Recorder rec("four-way " + group_name(model, rank));
  guarded(rec, "four-way", [&] {
    const Family family = family_for(model);
    const auto poset = WeakOrderPoset::build(model, rank);
    const IntPolynomial from_poset = char_poly_of_poset(poset);
    const IntPolynomial subset = char_poly_subset_sum(family, rank);
    const CoxeterGraph graph = CoxeterGraph::build(family, rank);
    const IntPolynomial decomposed =
        char_poly_interval_decomposed(graph, poset.element(poset.bottom()), poset.element(*poset.top()));
    const IntPolynomial series =
        extract_modified_charpoly(family, rank).reversed(longest_length(family, rank));
    rec.expect(from_poset == subset, "poset vs subset: " + mismatch(from_poset, subset));
    rec.expect(from_poset == decomposed, "poset vs decomposed: " + mismatch(from_poset, decomposed));
    rec.expect(from_poset == series, "poset vs series: " + mismatch(from_poset, series));
  });
  return rec.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"length", "mobius", "interval", "descent", "fixed", "alt",
                                              "genfun", "affine", "lattice", "product", "four-way"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      auto part = run_suite(suite, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const int a = options.max_a;
  const int bd = options.max_bd;
  auto over_models = [&](auto check) {
    for (int n = 1; n <= a; ++n) out.push_back(check(Model::PermA, n));
    for (int n = 2; n <= bd; ++n) out.push_back(check(Model::SignedB, n));
    for (int n = 4; n <= bd; ++n) out.push_back(check(Model::EvenSignedD, n));
  };
  if (name == "length") {
    over_models([](Model m, int n) { return lengths(m, n); });
  } else if (name == "mobius") {
    over_models([](Model m, int n) { return mobius(m, n); });
  } else if (name == "interval") {
    over_models([](Model m, int n) { return interval_decomposition(m, n, 200); });
  } else if (name == "descent") {
    for (int n = 1; n <= a; ++n) out.push_back(descent_classes(Model::PermA, n));
    for (int n = 2; n <= bd; ++n) out.push_back(descent_classes(Model::SignedB, n));
    for (int n = 1; n <= a; ++n) out.push_back(descent_class_polynomials(n));
  } else if (name == "fixed") {
    out.push_back(fixed_descent(a));
  } else if (name == "alt") {
    out.push_back(alternating(3, a + 1));
  } else if (name == "genfun") {
    out.push_back(generating_functions(10, 12));
  } else if (name == "affine") {
    out.push_back(affine(std::max(a, bd) + 3));
  } else if (name == "lattice") {
    for (int n = 1; n <= std::min(a, 4); ++n) out.push_back(lattice(Model::PermA, n));
    for (int n = 2; n <= std::min(bd, 3); ++n) out.push_back(lattice(Model::SignedB, n));
    for (int n = 1; n <= std::min(a, 3); ++n) out.push_back(lower_intervals(Model::PermA, n));
    for (int n = 2; n <= std::min(bd, 3); ++n) out.push_back(lower_intervals(Model::SignedB, n));
  } else if (name == "product") {
    out.push_back(products());
  } else if (name == "four-way") {
    over_models([](Model m, int n) { return four_way(m, n); });
  } else {
    std::string known;
    for (const auto& s : suite_names()) known += s + ", ";
    throw Error(ErrorCode::range, "unknown suite '" + name + "' (known: " + known + "all)");
  }
  return out;
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  cases     detail\n";
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.passed ? "pass  " : "FAIL  ")
        << "  " << std::setw(8) << r.cases << "  " << r.detail << '\n';
  }
  return out.str();
}

} // namespace coxchar::verify
