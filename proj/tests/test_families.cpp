#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "catalan/errors.hpp"
#include "catalan/families.hpp"
#include "catalan/formulas.hpp"

namespace catalan {

  namespace {
    PartialInjection pi(char const* text) {
      return parse_text(text);
    }
  }  // namespace

  TEST_CASE("families 001: orders", "[quick][families]") {
    REQUIRE(SemigroupTable::enumerate(FamilySpec::ic(3)).size() == 14);
    REQUIRE(SemigroupTable::enumerate(FamilySpec::qprime(3)).size() == 9);
    REQUIRE(SemigroupTable::enumerate(FamilySpec::sym_inv(3)).size() == 34);
    REQUIRE(SemigroupTable::enumerate(FamilySpec::ic(5)).size() == 132);
  }

  TEST_CASE("families 002: orders match closed forms", "[standard][families]") {
    auto const a000245 = formulas::a000245();
    for (int n = 1; n <= 8; ++n) {
      auto const ic = enumerate_members(FamilySpec::ic(n));
      auto const q  = enumerate_members(FamilySpec::qprime(n));
      REQUIRE(ic.size() == formulas::catalan(n + 1));
      REQUIRE(q.size() == formulas::t(n));
      REQUIRE(q.size() == *a000245.at(n));
      std::size_t with_one = 0;
      for (auto const& a : ic) {
        with_one += a.defined_at(1) ? 1 : 0;
      }
      REQUIRE(with_one == formulas::catalan(n));
    }
  }

  TEST_CASE("families 003: is_member", "[quick][families]") {
    REQUIRE(is_member(pi("3:2>1,3>3"), FamilySpec::ic(3)));
    REQUIRE(is_member(pi("3:2>1,3>3"), FamilySpec::qprime(3)));
    REQUIRE(!is_member(pi("3:1>1"), FamilySpec::qprime(3)));
    REQUIRE(!is_member(pi("3:2>1,3>3"), FamilySpec::k_ideal(3, 1)));
    REQUIRE(is_member(pi("3:2>3"), FamilySpec::sym_inv(3)));
    REQUIRE(!is_member(pi("3:2>3"), FamilySpec::ic(3)));
    REQUIRE(is_member(pi("3:2>1,3>3"), FamilySpec::rees_ic(3, 2)));
    REQUIRE(!is_member(pi("3:3>3"), FamilySpec::rees_ic(3, 2)));
  }

  TEST_CASE("families 004: spec validation", "[quick][families]") {
    REQUIRE_NOTHROW(FamilySpec::k_ideal(3, 3).validate());
    REQUIRE_THROWS_AS(FamilySpec::k_ideal(3, 4).validate(), ValidationError);
    REQUIRE_THROWS_AS(FamilySpec::k_ideal(3, 0).validate(), ValidationError);
    REQUIRE_THROWS_AS(FamilySpec::m_ideal(3, 3).validate(), ValidationError);
    REQUIRE_NOTHROW(FamilySpec::rees_q(3, 1).validate());
    REQUIRE_THROWS_AS((FamilySpec{FamilyKind::ic, 3, 2}).validate(),
                      ValidationError);
    REQUIRE_THROWS_AS((FamilySpec{FamilyKind::k_ideal, 3, {}}).validate(),
                      ValidationError);
    REQUIRE_THROWS_AS(SemigroupTable::enumerate(FamilySpec::ic(5), 4),
                      ResourceError);
    REQUIRE_THROWS_AS(SemigroupTable::enumerate(FamilySpec::ic(13), 13),
                      ResourceError);
    REQUIRE(FamilySpec::rees_q(5, 2).name() == "reesq(5,2)");
    REQUIRE(family_kind_from_string("mideal") == FamilyKind::m_ideal);
    REQUIRE(!family_kind_from_string("Q"));
  }

  TEST_CASE("families 005: table order and lookup", "[quick][families]") {
    auto const S = SemigroupTable::enumerate(FamilySpec::ic(3));
    for (Index i = 0; i + 1 < S.size(); ++i) {
      auto const key_i = std::make_pair(S.height(i), S.text(i));
      auto const key_j = std::make_pair(S.height(i + 1), S.text(i + 1));
      REQUIRE(key_i < key_j);
    }
    for (Index i = 0; i < S.size(); ++i) {
      REQUIRE(S.index_of(S.element(i)) == i);
      REQUIRE(S.index_of_text(S.text(i)) == i);
    }
    REQUIRE(S.text(0) == "3:");
    REQUIRE(S.zero_index() == 0);
    REQUIRE(S.identity_index() == S.index_of_text("3:1>1,2>2,3>3"));
    REQUIRE(!S.index_of_text("3:2>3"));
    REQUIRE(S.idempotents().size() == 8);
  }

  TEST_CASE("families 006: products agree with compose", "[quick][families]") {
    for (auto const& spec : {FamilySpec::ic(4), FamilySpec::qprime(4),
                             FamilySpec::k_ideal(4, 2), FamilySpec::m_ideal(4, 2),
                             FamilySpec::sym_inv(3)}) {
      auto const S = SemigroupTable::enumerate(spec);
      for (Index i = 0; i < S.size(); ++i) {
        for (Index j = 0; j < S.size(); ++j) {
          REQUIRE(S.element(S.product(i, j)) == S.element(i) * S.element(j));
        }
      }
    }
  }

  TEST_CASE("families 007: Rees products", "[quick][families]") {
    auto const S    = SemigroupTable::enumerate(FamilySpec::rees_ic(3, 2));
    auto const zero = *S.zero_index();
    REQUIRE(zero == 0);
    REQUIRE(S.is_zero_sentinel(zero));
    REQUIRE(S.text(zero) == "0");
    REQUIRE(S.height(zero) == -1);
    REQUIRE_THROWS_AS(S.element(zero), UnsupportedError);
    auto const a = *S.index_of_text("3:2>1,3>3");
    auto const b = *S.index_of_text("3:1>1,3>2");
    auto const c = *S.index_of_text("3:2>2,3>3");
    REQUIRE(S.text(rees_product(S, a, b)) == "3:2>1,3>2");
    REQUIRE(rees_product(S, a, c) == zero);
    for (Index i = 0; i < S.size(); ++i) {
      REQUIRE(S.product(zero, i) == zero);
      REQUIRE(S.product(i, zero) == zero);
    }
    auto const K = SemigroupTable::enumerate(FamilySpec::k_ideal(3, 2));
    REQUIRE_THROWS_AS(rees_product(K, 0, 0), ValidationError);
  }

  TEST_CASE("families 008: Rees quotient is a height slice", "[quick][families]") {
    for (int n = 2; n <= 5; ++n) {
      for (int p = 1; p <= n; ++p) {
        auto const R  = SemigroupTable::enumerate(FamilySpec::rees_ic(n, p));
        auto const K  = enumerate_members(FamilySpec::k_ideal(n, p));
        std::set<std::string> slice;
        for (auto const& a : K) {
          if (a.height() == p) {
            slice.insert(canonical_text(a));
          }
        }
        std::set<std::string> nonzero;
        for (Index i = 0; i < R.size(); ++i) {
          if (!R.is_zero_sentinel(i)) {
            nonzero.insert(R.text(i));
          }
        }
        REQUIRE(slice == nonzero);
      }
    }
  }

  TEST_CASE("families 009: identities", "[quick][families]") {
    REQUIRE(!SemigroupTable::enumerate(FamilySpec::qprime(4)).identity_index());
    REQUIRE(!SemigroupTable::enumerate(FamilySpec::k_ideal(4, 3)).identity_index());
    REQUIRE(SemigroupTable::enumerate(FamilySpec::k_ideal(4, 4)).identity_index());
    REQUIRE(SemigroupTable::enumerate(FamilySpec::m_ideal(4, 1)).zero_index());
  }

  TEST_CASE("families 010: synthetic tables", "[quick][families]") {
    // Left-zero semigroup of order 2.
    auto const S = SemigroupTable::from_cayley("leftzero", {"a", "b"},
                                               {0, 0, 1, 1});
    REQUIRE(S.size() == 2);
    REQUIRE(S.product(0, 1) == 0);
    REQUIRE(S.product(1, 0) == 1);
    REQUIRE(!S.identity_index());
    REQUIRE(!S.zero_index());
    REQUIRE(!S.has_elements());
    REQUIRE_THROWS_AS(S.element(0), UnsupportedError);
    REQUIRE_THROWS_AS(SemigroupTable::from_cayley("bad", {"a"}, {0, 0}),
                      ValidationError);
    REQUIRE_THROWS_AS(SemigroupTable::from_cayley("bad", {"a"}, {3}),
                      ValidationError);
  }

  TEST_CASE("families 011: large tables use on-the-fly products",
            "[standard][families]") {
    auto const S = SemigroupTable::enumerate(FamilySpec::ic(7));
    REQUIRE(S.size() == 1430);
    auto const T = SemigroupTable::enumerate(FamilySpec::ic(8));
    REQUIRE(T.size() == 4862);
    auto const a = *T.index_of_text("8:2>1,3>3");
    auto const b = *T.index_of_text("8:1>1,3>2");
    REQUIRE(T.text(T.product(a, b)) == "8:2>1,3>2");
  }

}  // namespace catalan
