#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "catalan/errors.hpp"
#include "catalan/families.hpp"
#include "catalan/genrank.hpp"
#include "catalan/greens.hpp"
#include "catalan/verify.hpp"

namespace catalan {

  namespace {
    PartialInjection pi(char const* text) {
      return parse_text(text);
    }

    std::vector<std::string> texts(SemigroupTable const&     S,
                                   std::vector<Index> const& idx) {
      std::vector<std::string> out;
      for (auto i : idx) {
        out.push_back(S.text(i));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<std::string> texts(std::vector<PartialInjection> const& v) {
      std::vector<std::string> out;
      for (auto const& a : v) {
        out.push_back(canonical_text(a));
      }
      return out;
    }

    std::vector<Index> all_indices(SemigroupTable const& S) {
      std::vector<Index> v(S.size());
      for (Index i = 0; i < S.size(); ++i) {
        v[i] = i;
      }
      return v;
    }

    // Elements of S of the given height.
    std::vector<Index> slice(SemigroupTable const& S, int h) {
      std::vector<Index> v;
      for (Index i = 0; i < S.size(); ++i) {
        if (S.height(i) == h) {
          v.push_back(i);
        }
      }
      return v;
    }
  }  // namespace

  TEST_CASE("genrank 001: closure", "[quick][genrank]") {
    auto const S = SemigroupTable::enumerate(FamilySpec::ic(3));
    REQUIRE(closure(S, all_indices(S)).size() == 14);
    auto const id = *S.identity_index();
    REQUIRE(closure(S, {id}) == std::vector<Index>{id});
    auto gens = slice(S, 2);
    std::erase_if(gens, [&](Index i) {
      auto const& a = S.element(i);
      return !is_idempotent(a) && !is_essential(a);
    });
    gens.push_back(id);
    REQUIRE(closure(S, gens).size() == 14);
    REQUIRE_THROWS_AS(closure(S, {99}), ValidationError);
  }

  TEST_CASE("genrank 002: indecomposables", "[quick][genrank]") {
    auto const ic2 = SemigroupTable::enumerate(FamilySpec::ic(2));
    REQUIRE(texts(ic2, indecomposables(ic2))
            == std::vector<std::string>{"2:1>1", "2:1>1,2>2", "2:2>1", "2:2>2"});
    auto const q3 = SemigroupTable::enumerate(FamilySpec::qprime(3));
    REQUIRE(texts(q3, indecomposables(q3))
            == std::vector<std::string>{"3:2>1,3>2", "3:2>1,3>3", "3:2>2",
                                        "3:2>2,3>3"});
    // 3>3 is the square of 2>1,3>3, so it only survives the strict variant.
    auto const strict = texts(q3, indecomposables(q3, true));
    REQUIRE(std::find(strict.begin(), strict.end(), "3:3>3") == strict.end());
    auto const lz = SemigroupTable::from_cayley("leftzero", {"a", "b"}, {0, 0, 1, 1});
    REQUIRE(indecomposables(lz).size() == 2);
  }

  TEST_CASE("genrank 003: minimal generating sets", "[quick][genrank]") {
    auto const ic3 = minimal_generating_set(SemigroupTable::enumerate(FamilySpec::ic(3)));
    REQUIRE(ic3.rank == 6);
    REQUIRE(ic3.idempotents.size() == 3);
    REQUIRE(ic3.essentials.size() == 2);
    REQUIRE(ic3.identity == std::vector<std::string>{"3:1>1,2>2,3>3"});
    REQUIRE(ic3.agrees == true);
    REQUIRE(!ic3.greedy_fallback);

    auto const r = rank_check(FamilySpec::rees_ic(4, 2));
    REQUIRE(r.rank == 12);
    REQUIRE(r.formula == 12);

    auto const q3 = rank_check(FamilySpec::qprime(3));
    REQUIRE(q3.rank == 4);
    REQUIRE(q3.requisites.size() == 2);
    REQUIRE(q3.idempotents.size() == 2);

    REQUIRE(rank_check(FamilySpec::k_ideal(4, 2)).rank == 12);
    REQUIRE(rank_check(FamilySpec::m_ideal(4, 2)).rank == 8);
  }

  TEST_CASE("genrank 004: greedy fallback on non-J-trivial tables",
            "[quick][genrank]") {
    auto const I = SemigroupTable::enumerate(FamilySpec::sym_inv(3));
    auto const r = minimal_generating_set(I);
    REQUIRE(r.greedy_fallback);
    REQUIRE(closure(I, r.generators).size() == I.size());
    REQUIRE(!r.formula);
    REQUIRE_THROWS_AS(maximal_subsemigroups(I), UnsupportedError);
  }

  TEST_CASE("genrank 005: rank of Q'_n", "[standard][genrank]") {
    // Brute-force values; the closed form n^2 - 3n + 4 only matches at n <= 3.
    std::vector<std::size_t> const expected{1, 2, 4, 7, 10, 13};
    for (int n = 1; n <= 6; ++n) {
      auto const r = rank_check(FamilySpec::qprime(n));
      REQUIRE(r.rank == expected[static_cast<std::size_t>(n - 1)]);
      auto const strict = indecomposables(
          SemigroupTable::enumerate(FamilySpec::qprime(n)), true);
      REQUIRE(strict.size() == r.rank);
    }
  }

  TEST_CASE("genrank 006: quasi-idempotent chain", "[quick][genrank]") {
    REQUIRE(texts(factor_idempotent_quasi_chain(pi("3:2>1,3>2")))
            == std::vector<std::string>{"3:2>1,3>3", "3:1>1,3>2"});
    auto const id = PartialInjection::identity(3);
    auto const f  = factor_idempotent_quasi_chain(id);
    REQUIRE(f.size() == 3);
    REQUIRE(std::all_of(f.begin(), f.end(), [&](auto const& x) { return x == id; }));
    REQUIRE(factor_idempotent_quasi_chain(pi("3:")).empty());
    REQUIRE_THROWS_AS(factor_idempotent_quasi_chain(pi("3:2>3")), ContractError);
  }

  TEST_CASE("genrank 007: essential expansion", "[quick][genrank]") {
    REQUIRE(texts(expand_quasi_to_essentials(pi("3:3>1")))
            == std::vector<std::string>{"3:3>2", "3:2>1"});
    REQUIRE(texts(expand_quasi_to_essentials(pi("3:2>1,3>3")))
            == std::vector<std::string>{"3:2>1,3>3"});
    REQUIRE_THROWS_AS(expand_quasi_to_essentials(pi("3:2>1,3>2")), ContractError);
    REQUIRE_THROWS_AS(expand_quasi_to_essentials(pi("3:1>1")), ContractError);
  }

  TEST_CASE("genrank 008: requisite factorization", "[quick][genrank]") {
    auto a = factor_requisite(pi("3:2>1,3>3"));
    REQUIRE(canonical_text(a.beta) == "3:2>2,3>3");
    REQUIRE(canonical_text(a.requisite) == "3:2>1,3>3");
    auto b = factor_requisite(pi("3:2>1,3>2"));
    REQUIRE(canonical_text(b.beta) == "3:2>2,3>3");
    REQUIRE(canonical_text(b.requisite) == "3:2>1,3>2");
    auto c = factor_requisite(pi("5:3>1,5>4"));
    REQUIRE(c.beta * c.requisite == pi("5:3>1,5>4"));
    REQUIRE(is_requisite(c.requisite));
    REQUIRE_THROWS_AS(factor_requisite(pi("3:3>2")), ContractError);
    REQUIRE_THROWS_AS(factor_requisite(pi("3:1>1")), ContractError);
  }

  TEST_CASE("genrank 009: height lifting", "[quick][genrank]") {
    auto [a, b] = lift_height(pi("3:1>1"), FamilyKind::ic);
    REQUIRE(canonical_text(a) == "3:1>1,2>2");
    REQUIRE(canonical_text(b) == "3:1>1,3>3");

    auto [c, d] = lift_height(pi("4:2>1"), FamilyKind::ic);
    REQUIRE(is_essential(c));
    REQUIRE(c.height() == 2);
    REQUIRE(c * d == pi("4:2>1"));

    auto [e, f] = lift_height(pi("5:2>1"), FamilyKind::qprime);
    REQUIRE(is_idempotent(e));
    REQUIRE(is_requisite(f));
    REQUIRE(e.height() == 2);
    REQUIRE(e * f == pi("5:2>1"));

    REQUIRE_THROWS_AS(lift_height(pi("3:1>1,2>2"), FamilyKind::ic), ContractError);
    REQUIRE_THROWS_AS(lift_height(pi("4:3>1"), FamilyKind::ic), ContractError);
    REQUIRE_THROWS_AS(lift_height(pi("4:2>1,3>3"), FamilyKind::qprime), ContractError);
    REQUIRE_THROWS_AS(lift_height(pi("5:2>1"), FamilyKind::sym_inv), ContractError);
  }

  TEST_CASE("genrank 010: factorization round trips", "[standard][genrank]") {
    for (int n = 1; n <= 5; ++n) {
      for (auto const& spec : {FamilySpec::ic(n), FamilySpec::qprime(n)}) {
        auto const f = check_factorizations(spec);
        CAPTURE(spec.name(), f.first_failure);
        REQUIRE(f.checked == enumerate_members(spec).size());
        REQUIRE(f.failed == 0);
        auto const l = check_height_lifting(spec);
        CAPTURE(l.first_failure);
        REQUIRE(l.failed == 0);
      }
    }
  }

  TEST_CASE("genrank 011: maximal subsemigroups", "[quick][genrank]") {
    auto const ic3 = SemigroupTable::enumerate(FamilySpec::ic(3));
    auto const max = maximal_subsemigroups(ic3);
    REQUIRE(max.size() == 6);
    for (auto const& m : max) {
      REQUIRE(m.closed);
      REQUIRE(m.maximal);
    }
    REQUIRE(maximal_subsemigroups_exhaustive(ic3).size() == 6);

    auto const q3 = SemigroupTable::enumerate(FamilySpec::qprime(3));
    REQUIRE(maximal_subsemigroups(q3).size() == 4);
    REQUIRE(maximal_subsemigroups_exhaustive(q3).size() == 4);

    auto const q4 = SemigroupTable::enumerate(FamilySpec::qprime(4));
    REQUIRE(maximal_subsemigroups(q4).size() == 7);
    REQUIRE_THROWS_AS(maximal_subsemigroups_exhaustive(q4), ResourceError);
  }

  TEST_CASE("genrank 012: exhaustive search agrees on small tables",
            "[standard][genrank]") {
    for (int n = 1; n <= 5; ++n) {
      for (auto const& spec : six_families(n)) {
        auto const S = SemigroupTable::enumerate(spec);
        if (S.size() > 16) {
          continue;
        }
        CAPTURE(S.name());
        auto const fast = maximal_subsemigroups(S);
        auto const slow = maximal_subsemigroups_exhaustive(S);
        std::vector<std::vector<Index>> from_fast, from_slow;
        for (auto const& m : fast) {
          REQUIRE((m.closed || S.size() == 1));
          std::vector<Index> members;
          for (Index i = 0; i < S.size(); ++i) {
            if (i != m.removed) {
              members.push_back(i);
            }
          }
          if (!members.empty()) {
            from_fast.push_back(members);
          }
        }
        for (auto const& b : slow) {
          std::vector<Index> members;
          b.for_each([&](std::size_t i) { members.push_back(static_cast<Index>(i)); });
          from_slow.push_back(members);
        }
        std::sort(from_fast.begin(), from_fast.end());
        std::sort(from_slow.begin(), from_slow.end());
        REQUIRE(from_fast == from_slow);
      }
    }
  }

  TEST_CASE("genrank 013: no smaller generating set", "[standard][genrank]") {
    // Every generating set contains the indecomposables, so dropping any
    // one of them must lose the generation property.
    for (int n = 2; n <= 4; ++n) {
      for (auto const& spec : six_families(n)) {
        auto const S = SemigroupTable::enumerate(spec);
        if (S.size() > 60) {
          continue;
        }
        auto const gens = indecomposables(S);
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto rest = gens;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          std::vector<Index> everything_else;
          for (Index i = 0; i < S.size(); ++i) {
            if (i != gens[k]) {
              everything_else.push_back(i);
            }
          }
          auto const cl = closure(S, everything_else);
          REQUIRE(!std::binary_search(cl.begin(), cl.end(), gens[k]));
        }
      }
    }
  }

  TEST_CASE("genrank 014: generation boundary in Q'_n", "[quick][genrank]") {
    for (int n : {4, 5}) {
      auto const S     = SemigroupTable::enumerate(FamilySpec::qprime(n));
      auto const top   = slice(S, n - 1);
      auto const below = slice(S, n - 2);
      auto const cl    = closure(S, top);
      auto const in_cl = [&](Index i) {
        return std::binary_search(cl.begin(), cl.end(), i);
      };
      bool missing_essential = false;
      for (auto i : below) {
        auto const& a = S.element(i);
        if (is_essential(a) && !is_requisite(a) && a.defined_at(2) && !in_cl(i)) {
          missing_essential = true;
        }
      }
      REQUIRE(missing_essential);
      std::vector<int> tail;
      for (int x = 3; x <= n; ++x) {
        tail.push_back(x);
      }
      auto const alpha23 = *S.index_of(PartialInjection::partial_identity(n, tail));
      REQUIRE(in_cl(alpha23));
      auto both = top;
      both.insert(both.end(), below.begin(), below.end());
      REQUIRE(closure(S, both).size() == S.size());
    }
  }

  TEST_CASE("genrank 015: left identity of Q'_n", "[quick][genrank]") {
    for (int n = 2; n <= 5; ++n) {
      auto const S   = SemigroupTable::enumerate(FamilySpec::qprime(n));
      auto const top = slice(S, n - 1);
      REQUIRE(starred_R(S).class_containing(top.front()).size() == top.size());
      std::set<std::size_t> l_classes;
      for (auto i : top) {
        l_classes.insert(starred_L(S).class_of(i));
      }
      REQUIRE(l_classes.size() == static_cast<std::size_t>(n));
      std::vector<int> dom;
      for (int x = 2; x <= n; ++x) {
        dom.push_back(x);
      }
      auto const e = *S.index_of(PartialInjection::partial_identity(n, dom));
      bool left = true, right = true;
      for (Index a = 0; a < S.size(); ++a) {
        left  = left && S.product(e, a) == a;
        right = right && S.product(a, e) == a;
      }
      REQUIRE(left);
      REQUIRE(!right);
    }
  }

}  // namespace catalan
