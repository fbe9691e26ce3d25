#include <catch2/catch_amalgamated.hpp>

#include "catalan/errors.hpp"
#include "catalan/families.hpp"
#include "catalan/greens.hpp"
#include "catalan/structure.hpp"
#include "catalan/verify.hpp"

namespace catalan {

  TEST_CASE("structure 001: regular elements", "[quick][structure]") {
    auto const ic = SemigroupTable::enumerate(FamilySpec::ic(3));
    REQUIRE(regular_elements(ic) == ic.idempotents());
    REQUIRE(regular_elements(ic).size() == 8);
    REQUIRE(!is_regular_semigroup(ic).holds);
    REQUIRE(!is_regular_semigroup(ic).witness.empty());

    auto const q = SemigroupTable::enumerate(FamilySpec::qprime(3));
    REQUIRE(regular_elements(q).size() == 4);

    auto const I = SemigroupTable::enumerate(FamilySpec::sym_inv(2));
    REQUIRE(is_regular_semigroup(I).holds);
  }

  TEST_CASE("structure 002: regular iff idempotent", "[standard][structure]") {
    for (int n = 1; n <= 6; ++n) {
      for (auto const& spec : {FamilySpec::ic(n), FamilySpec::qprime(n)}) {
        auto const S = SemigroupTable::enumerate(spec);
        REQUIRE(regular_elements(S) == S.idempotents());
      }
    }
  }

  TEST_CASE("structure 003: abundance", "[quick][structure]") {
    auto const ic = SemigroupTable::enumerate(FamilySpec::ic(4));
    REQUIRE(is_abundant(ic).holds);

    auto const q2   = SemigroupTable::enumerate(FamilySpec::qprime(2));
    auto const left = is_left_abundant(q2);
    REQUIRE(is_right_abundant(q2).holds);
    REQUIRE(!left.holds);
    REQUIRE(left.witness == std::vector<std::string>{"2:2>1"});
    REQUIRE(!is_abundant(q2).holds);

    for (auto const& spec : {FamilySpec::m_ideal(3, 1), FamilySpec::rees_q(3, 1),
                             FamilySpec::rees_q(3, 2)}) {
      auto const S = SemigroupTable::enumerate(spec);
      REQUIRE(is_right_abundant(S).holds);
      REQUIRE(!is_left_abundant(S).holds);
    }
  }

  TEST_CASE("structure 004: semilattice and adequacy", "[quick][structure]") {
    for (int n = 1; n <= 5; ++n) {
      auto const ic = SemigroupTable::enumerate(FamilySpec::ic(n));
      auto const q  = SemigroupTable::enumerate(FamilySpec::qprime(n));
      REQUIRE(is_semilattice_of_idempotents(ic).holds);
      REQUIRE(is_adequate(ic).holds);
      REQUIRE(is_semilattice_of_idempotents(q).holds);
      REQUIRE(is_right_adequate(q).holds);
    }
    auto const lz = SemigroupTable::from_cayley("leftzero", {"a", "b"},
                                                {0, 0, 1, 1});
    auto const r  = is_semilattice_of_idempotents(lz);
    REQUIRE(!r.holds);
    REQUIRE(r.witness.size() == 2);
  }

  TEST_CASE("structure 005: ample", "[quick][structure]") {
    REQUIRE(is_ample(SemigroupTable::enumerate(FamilySpec::ic(3))).holds);
    auto const q = SemigroupTable::enumerate(FamilySpec::qprime(3));
    REQUIRE(is_right_ample(q).holds);
    auto const a = is_ample(q);
    REQUIRE(!a.holds);
    REQUIRE(a.note.find("precondition") != std::string::npos);
    for (int n = 1; n <= 4; ++n) {
      for (auto const& spec : six_families(n)) {
        auto const S = SemigroupTable::enumerate(spec);
        CAPTURE(S.name());
        REQUIRE(unique_idempotent_per_r_class(S).holds);
      }
    }
  }

  TEST_CASE("structure 006: ample on IC_1 is computed", "[quick][structure]") {
    auto const S = SemigroupTable::enumerate(FamilySpec::ic(1));
    auto const r = is_ample(S);
    REQUIRE(r.property == "ample");
    REQUIRE(r.family == "icn(1)");
  }

  TEST_CASE("structure 007: inverse ideals", "[quick][structure]") {
    auto const I  = SemigroupTable::enumerate(FamilySpec::sym_inv(3));
    auto const ic = SemigroupTable::enumerate(FamilySpec::ic(3));
    auto const q  = SemigroupTable::enumerate(FamilySpec::qprime(3));
    REQUIRE(is_inverse_ideal(ic, I).holds);
    REQUIRE(is_right_inverse_ideal(q, I).holds);
    auto const full = is_inverse_ideal(q, I);
    REQUIRE(!full.holds);
    REQUIRE(full.witness.size() == 1);
    // The witness has 1 in its image.
    REQUIRE(parse_text(full.witness.front()).image_mask() & 1u);

    auto const E = SemigroupTable::enumerate(FamilySpec::k_ideal(3, 0 + 1));
    REQUIRE_THROWS_AS(is_inverse_ideal(I, ic), ValidationError);
    auto const R = SemigroupTable::enumerate(FamilySpec::rees_ic(3, 1));
    REQUIRE_THROWS_AS(is_inverse_ideal(R, I), ValidationError);
    REQUIRE(is_inverse_ideal(E, I).holds);
  }

  TEST_CASE("structure 008: idempotent census", "[quick][structure]") {
    auto const ic = idempotent_census(SemigroupTable::enumerate(FamilySpec::ic(4)));
    REQUIRE(ic.per_height == std::map<int, std::size_t>{
                                 {0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}});
    REQUIRE(ic.total == 16);
    auto const q = idempotent_census(SemigroupTable::enumerate(FamilySpec::qprime(4)));
    REQUIRE(q.per_height == std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    REQUIRE(q.total == 8);
    auto const r
        = idempotent_census(SemigroupTable::enumerate(FamilySpec::rees_ic(4, 2)));
    REQUIRE(r.total == 6);
    REQUIRE(r.zero_sentinel_idempotent);
  }

  TEST_CASE("structure 009: property matrix n <= 5", "[standard][structure]") {
    for (int n = 1; n <= 5; ++n) {
      for (auto const& spec : six_families(n)) {
        auto const S = SemigroupTable::enumerate(spec);
        CAPTURE(S.name());
        REQUIRE(is_j_trivial(S).holds);
        REQUIRE(is_right_abundant(S).holds);
        if (is_qprime_side(spec.kind)) {
          auto const left = is_left_abundant(S);
          REQUIRE(left.holds == (n < 2));
          if (!left.holds) {
            REQUIRE(!left.witness.empty());
          }
        } else {
          REQUIRE(is_abundant(S).holds);
        }
      }
      if (n >= 2) {
        REQUIRE(is_ample(SemigroupTable::enumerate(FamilySpec::ic(n))).holds);
      }
      REQUIRE(is_right_ample(SemigroupTable::enumerate(FamilySpec::qprime(n))).holds);
    }
  }

}  // namespace catalan
