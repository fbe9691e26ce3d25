#ifndef CATALAN_VERIFY_HPP_
#define CATALAN_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/families.hpp"
#include "catalan/partition.hpp"

namespace catalan {

  enum class ClaimStatus { pass, fail, paper_inconsistent, skipped };

  std::string_view to_string(ClaimStatus status) noexcept;

  struct ClaimRow {
    std::string id;
    std::string location;
    std::string family;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::skipped;
  };

  struct VerificationReport {
    std::vector<ClaimRow> rows;

    std::size_t count(ClaimStatus status) const noexcept;
    // No row has status fail.
    bool ok() const noexcept {
      return count(ClaimStatus::fail) == 0;
    }
  };

  struct VerifyOptions {
    int n_max         = 4;
    int starred_n_max = 4;
    int maximal_n_max = 6;
    int cap           = 12;
  };

  //! Runs every claim check up to the given sizes.
  //!
  //! Rank and maximal-subsemigroup rows for Q'_n with n >= 5 are reported
  //! with status paper_inconsistent when the closed form disagrees; all
  //! other rows are asserted.
  VerificationReport run_verification(VerifyOptions const& options);

  // Reference partitions the starred relations are compared against. The
  // Rees zero sentinel is kept in a class of its own.
  IndexPartition image_partition(SemigroupTable const& S);
  IndexPartition domain_partition(SemigroupTable const& S);
  IndexPartition height_partition(SemigroupTable const& S);

  //! Every family spec of the six enumerable families at chain size n,
  //! over all valid height bounds.
  std::vector<FamilySpec> six_families(int n);

  struct FactorizationTally {
    std::size_t checked = 0;
    std::size_t failed  = 0;
    std::string first_failure;
  };

  //! Recomposes the idempotent/essential (and, on Q'_n, requisite)
  //! factorization of every element of IC_n or Q'_n, checking kinds,
  //! heights and membership of every factor.
  FactorizationTally check_factorizations(FamilySpec const& spec);

  //! Checks lift_height on every eligible element of IC_n or Q'_n.
  FactorizationTally check_height_lifting(FamilySpec const& spec);

}  // namespace catalan

#endif  // CATALAN_VERIFY_HPP_
