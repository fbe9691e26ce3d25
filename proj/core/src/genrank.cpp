#include "catalan/genrank.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "catalan/errors.hpp"
#include "catalan/formulas.hpp"
#include "catalan/structure.hpp"

namespace catalan {

  namespace {
    using Pair = PartialInjection::Pair;

    bool in_ic(PartialInjection const& alpha) {
      return is_isotone(alpha) && is_decreasing(alpha);
    }

    bool in_qprime(PartialInjection const& alpha) {
      return in_ic(alpha) && !alpha.defined_at(1);
    }

    // Points of [n] outside mask, ascending.
    std::vector<int> points_outside(int n, std::uint32_t mask) {
      std::vector<int> result;
      for (int x = 1; x <= n; ++x) {
        if (!(mask & (1u << (x - 1)))) {
          result.push_back(x);
        }
      }
      return result;
    }

    PartialInjection with_fixed_point(PartialInjection const& alpha, int d) {
      auto pairs = alpha.pairs();
      pairs.emplace_back(d, d);
      return PartialInjection::from_pairs(alpha.degree(), pairs);
    }

    PartialInjection identity_on(int n, std::vector<int> points) {
      return PartialInjection::partial_identity(n, points);
    }

    // The unique moved point of a shift-1 map.
    Pair moved_pair(PartialInjection const& alpha) {
      for (auto pr : alpha.pairs()) {
        if (pr.first != pr.second) {
          return pr;
        }
      }
      throw ContractError("map " + canonical_text(alpha) + " moves no point");
    }

    void check_product(std::vector<PartialInjection> const& factors,
                       PartialInjection const&              expected) {
      PartialInjection product = PartialInjection::identity(expected.degree());
      for (auto const& f : factors) {
        product = product * f;
      }
      if (product != expected) {
        throw Error("internal error: factors of " + canonical_text(expected)
                    + " multiply to " + canonical_text(product));
      }
    }

    std::pair<PartialInjection, PartialInjection> lift_essential(
        PartialInjection const& alpha,
        std::vector<int> const& free_points) {
      int const n = alpha.degree();
      if (free_points.empty()) {
        throw ContractError("no point outside dom and im of "
                            + canonical_text(alpha));
      }
      auto const [y, ya] = moved_pair(alpha);
      auto left          = with_fixed_point(alpha, free_points.front());
      auto dom           = alpha.domain();
      dom.push_back(ya);
      return {left, identity_on(n, dom)};
    }
  }  // namespace

  std::vector<Index> closure(SemigroupTable const&     S,
                             std::vector<Index> const& gens) {
    DynamicBitset      seen(S.size());
    std::vector<Index> unique_gens;
    std::deque<Index>  queue;
    for (auto g : gens) {
      if (g >= S.size()) {
        throw ValidationError("generator index " + std::to_string(g)
                              + " out of range");
      }
      if (!seen.test(g)) {
        seen.set(g);
        unique_gens.push_back(g);
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      Index const x = queue.front();
      queue.pop_front();
      for (auto g : unique_gens) {
        Index const y = S.product(x, g);
        if (!seen.test(y)) {
          seen.set(y);
          queue.push_back(y);
        }
      }
    }
    std::vector<Index> result;
    seen.for_each([&](std::size_t i) { result.push_back(static_cast<Index>(i)); });
    return result;
  }

  std::vector<Index> indecomposables(SemigroupTable const& S,
                                     bool strict_distinct_factors) {
    std::vector<bool> decomposable(S.size(), false);
    for (Index b = 0; b < S.size(); ++b) {
      for (Index c = 0; c < S.size(); ++c) {
        if (strict_distinct_factors && b == c) {
          continue;
        }
        Index const a = S.product(b, c);
        if (a != b && a != c) {
          decomposable[a] = true;
        }
      }
    }
    std::vector<Index> result;
    for (Index a = 0; a < S.size(); ++a) {
      if (!decomposable[a]) {
        result.push_back(a);
      }
    }
    return result;
  }

  GeneratorReport minimal_generating_set(SemigroupTable const& S) {
    GeneratorReport report;
    report.family = S.name();
    if (is_j_trivial(S).holds) {
      report.generators = indecomposables(S);
    } else {
      report.greedy_fallback = true;
      std::vector<Index> gens(S.size());
      for (Index i = 0; i < S.size(); ++i) {
        gens[i] = i;
      }
      for (std::size_t k = gens.size(); k-- > 0;) {
        auto trial = gens;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (!trial.empty() && closure(S, trial).size() == S.size()) {
          gens = std::move(trial);
        }
      }
      report.generators = std::move(gens);
    }
    if (closure(S, report.generators).size() != S.size()) {
      throw Error("internal error: generating set of " + S.name()
                  + " does not generate");
    }
    for (std::size_t k = 0; k < report.generators.size(); ++k) {
      auto others = report.generators;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
      auto cl = closure(S, others);
      if (std::binary_search(cl.begin(), cl.end(), report.generators[k])) {
        throw Error("internal error: generator " + S.text(report.generators[k])
                    + " of " + S.name() + " is redundant");
      }
    }
    report.rank = report.generators.size();

    bool const q_side = S.family() && is_qprime_side(S.family()->kind);
    for (auto g : report.generators) {
      std::string const& text = S.text(g);
      if (S.identity_index() == g) {
        report.identity.push_back(text);
      } else if (S.is_idempotent(g)) {
        report.idempotents.push_back(text);
      } else if (!S.has_elements()) {
        report.other.push_back(text);
      } else {
        auto const& alpha = S.element(g);
        if (q_side && is_requisite(alpha)) {
          report.requisites.push_back(text);
        } else if (is_essential(alpha)) {
          report.essentials.push_back(text);
        } else if (is_requisite(alpha)) {
          report.requisites.push_back(text);
        } else {
          report.other.push_back(text);
        }
      }
    }
    if (S.family()) {
      report.formula = formulas::rank_formula(*S.family());
      if (report.formula) {
        report.agrees = *report.formula == report.rank;
      }
    }
    return report;
  }

  GeneratorReport rank_check(FamilySpec const& spec, int cap) {
    return minimal_generating_set(SemigroupTable::enumerate(spec, cap));
  }

  std::vector<PartialInjection> factor_idempotent_quasi_chain(
      PartialInjection const& alpha) {
    if (!in_ic(alpha)) {
      throw ContractError(canonical_text(alpha)
                          + " is not isotone and order-decreasing");
    }
    int const  n     = alpha.degree();
    auto const pairs = alpha.pairs();
    std::vector<PartialInjection> factors;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::vector<Pair> eps;
      for (std::size_t j = 0; j < i; ++j) {
        eps.emplace_back(pairs[j].second, pairs[j].second);
      }
      eps.push_back(pairs[i]);
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        eps.emplace_back(pairs[j].first, pairs[j].first);
      }
      factors.push_back(PartialInjection::from_pairs(n, eps));
    }
    if (!factors.empty()) {
      check_product(factors, alpha);
    }
    return factors;
  }

  std::vector<PartialInjection> expand_quasi_to_essentials(
      PartialInjection const& eps) {
    if (!in_ic(eps) || eps.shift() != 1 || !is_quasi_idempotent(eps)) {
      throw ContractError(canonical_text(eps)
                          + " is not a shift-1 quasi-idempotent of IC_n");
    }
    int const  n      = eps.degree();
    auto const [y, b] = moved_pair(eps);
    int const  s      = y - b;
    std::vector<PartialInjection> factors;
    for (int j = s; j >= 1; --j) {
      std::vector<Pair> pairs;
      for (auto [x, a] : eps.pairs()) {
        if (x == y) {
          pairs.emplace_back(b + j, b + j - 1);
        } else {
          pairs.emplace_back(x, a);
        }
      }
      factors.push_back(PartialInjection::from_pairs(n, pairs));
    }
    check_product(factors, eps);
    return factors;
  }

  std::vector<PartialInjection> factor_into_generators(
      PartialInjection const& alpha) {
    std::vector<PartialInjection> result;
    for (auto const& f : factor_idempotent_quasi_chain(alpha)) {
      if (is_idempotent(f)) {
        result.push_back(f);
      } else {
        auto expanded = expand_quasi_to_essentials(f);
        result.insert(result.end(), expanded.begin(), expanded.end());
      }
    }
    return result;
  }

  RequisiteFactorization factor_requisite(PartialInjection const& alpha) {
    if (!in_qprime(alpha)) {
      throw ContractError(canonical_text(alpha) + " is not an element of Q'_n");
    }
    if (!(alpha.image_mask() & 1u)) {
      throw ContractError("1 is not in the image of " + canonical_text(alpha)
                          + "; no requisite factor is needed");
    }
    int const  n     = alpha.degree();
    auto const pairs = alpha.pairs();
    // Length of the initial run 1, 2, ..., r of the image.
    std::size_t r = 0;
    while (r < pairs.size() && pairs[r].second == static_cast<int>(r) + 1) {
      ++r;
    }
    std::vector<Pair> beta, req;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j < r) {
        int const a = static_cast<int>(j) + 1;
        beta.emplace_back(pairs[j].first, a + 1);
        req.emplace_back(a + 1, a);
      } else {
        beta.push_back(pairs[j]);
        req.emplace_back(pairs[j].second, pairs[j].second);
      }
    }
    RequisiteFactorization result{PartialInjection::from_pairs(n, beta),
                                  PartialInjection::from_pairs(n, req)};
    check_product({result.beta, result.requisite}, alpha);
    return result;
  }

  std::pair<PartialInjection, PartialInjection> lift_height(
      PartialInjection const& alpha,
      FamilyKind              family) {
    int const n = alpha.degree();
    int const p = alpha.height();
    if (family == FamilyKind::ic) {
      if (!in_ic(alpha)) {
        throw ContractError(canonical_text(alpha) + " is not in IC_n");
      }
      if (p > n - 2) {
        throw ContractError("height lifting in IC_n needs h <= n - 2, got h = "
                            + std::to_string(p));
      }
      if (is_idempotent(alpha)) {
        auto free = points_outside(n, alpha.domain_mask());
        auto a    = alpha.domain();
        auto b    = alpha.domain();
        a.push_back(free[0]);
        b.push_back(free[1]);
        return {identity_on(n, a), identity_on(n, b)};
      }
      if (is_essential(alpha)) {
        return lift_essential(
            alpha, points_outside(n, alpha.domain_mask() | alpha.image_mask()));
      }
      throw ContractError(canonical_text(alpha)
                          + " is neither idempotent nor essential");
    }
    if (family == FamilyKind::qprime) {
      if (!in_qprime(alpha)) {
        throw ContractError(canonical_text(alpha) + " is not in Q'_n");
      }
      if (p > n - 3) {
        throw ContractError("height lifting in Q'_n needs h <= n - 3, got h = "
                            + std::to_string(p));
      }
      if (is_idempotent(alpha)) {
        auto free = points_outside(n, alpha.domain_mask() | 1u);
        auto a    = alpha.domain();
        auto b    = alpha.domain();
        a.push_back(free[0]);
        b.push_back(free[1]);
        return {identity_on(n, a), identity_on(n, b)};
      }
      auto const used = alpha.domain_mask() | alpha.image_mask();
      if (is_requisite(alpha)) {
        auto free = points_outside(n, used);
        auto dom  = alpha.domain();
        dom.push_back(free[0]);
        return {identity_on(n, dom), with_fixed_point(alpha, free[1])};
      }
      if (is_essential(alpha)) {
        return lift_essential(alpha, points_outside(n, used | 1u));
      }
      throw ContractError(canonical_text(alpha)
                          + " is not idempotent, essential or requisite");
    }
    throw ContractError("height lifting is defined for icn and qprime only");
  }

  bool is_closed(SemigroupTable const& S, DynamicBitset const& members) {
    bool closed = true;
    members.for_each([&](std::size_t i) {
      if (!closed) {
        return;
      }
      members.for_each([&](std::size_t j) {
        if (closed
            && !members.test(S.product(static_cast<Index>(i),
                                       static_cast<Index>(j)))) {
          closed = false;
        }
      });
    });
    return closed;
  }

  std::vector<MaximalSubsemigroup> maximal_subsemigroups(
      SemigroupTable const& S) {
    if (auto jt = is_j_trivial(S); !jt.holds) {
      throw UnsupportedError("maximal subsemigroups need a J-trivial table; "
                             + S.name() + " is not");
    }
    auto const gens      = indecomposables(S);
    bool const generates = closure(S, gens).size() == S.size();
    std::vector<MaximalSubsemigroup> result;
    for (auto g : gens) {
      DynamicBitset members(S.size());
      for (Index i = 0; i < S.size(); ++i) {
        if (i != g) {
          members.set(i);
        }
      }
      MaximalSubsemigroup m{g};
      m.closed  = !members.none() && is_closed(S, members);
      m.maximal = m.closed && generates;
      result.push_back(m);
    }
    return result;
  }

  std::vector<DynamicBitset> maximal_subsemigroups_exhaustive(
      SemigroupTable const& S,
      std::size_t           max_size) {
    std::size_t const n = S.size();
    if (n > max_size || n > 24) {
      throw ResourceError("exhaustive subsemigroup search is limited to "
                          + std::to_string(std::min<std::size_t>(max_size, 24))
                          + " elements");
    }
    // Row masks: prod[i] lists products i * j as bits, per j.
    std::vector<std::uint32_t> closed;
    std::uint32_t const        full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      bool ok = true;
      for (std::uint32_t a = mask; a && ok; a &= a - 1) {
        Index const i = static_cast<Index>(std::countr_zero(a));
        for (std::uint32_t b = mask; b && ok; b &= b - 1) {
          Index const j = static_cast<Index>(std::countr_zero(b));
          ok            = (mask >> S.product(i, j)) & 1u;
        }
      }
      if (ok) {
        closed.push_back(mask);
      }
    }
    std::vector<DynamicBitset> result;
    for (auto m : closed) {
      bool maximal = true;
      for (auto other : closed) {
        if (other != m && (other & m) == m) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        DynamicBitset bits(n);
        for (std::uint32_t a = m; a; a &= a - 1) {
          bits.set(static_cast<std::size_t>(std::countr_zero(a)));
        }
        result.push_back(std::move(bits));
      }
    }
    return result;
  }

}  // namespace catalan
