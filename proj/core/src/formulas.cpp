#include "catalan/formulas.hpp"

#include <array>
#include <limits>
#include <string>

#include "catalan/errors.hpp"

namespace catalan::formulas {

  namespace {
    constexpr std::array<std::uint64_t, 12> kA000245{
        0, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934, 41990, 149226};

    constexpr std::array<std::uint64_t, 12> kA001787{
        0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264};

    constexpr std::array<std::uint64_t, 13> kA000108{
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};

    constexpr std::array<std::uint64_t, 66> kA007318{
        1, 1, 1, 1, 2,  1,  1,  3,   3,   1,   1,   4,   6,  4,  1,  1, 5,
        10, 10, 5, 1, 1, 6,  15, 20,  15,  6,   1,   1,   7,  21, 35, 35, 21,
        7, 1, 1, 8, 28, 56, 70, 56,  28,  8,   1,   1,   9,  36, 84, 126, 126,
        84, 36, 9, 1, 1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1};

    constexpr std::array<std::uint64_t, 55> kA003506{
        1,  2,  2,   3,   6,   3,   4,   12,   12,   4,   5,   20,  30, 20,
        5,  6,  30,  60,  60,  30,  6,   7,    42,   105, 140, 105, 42, 7,
        8,  56, 168, 280, 280, 168, 56,  8,    9,    72,  252, 504, 630, 504,
        252, 72, 9, 10, 90, 360, 840, 1260, 1260, 840, 360, 90, 10};

    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in closed-form count");
      }
      return r;
    }

    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in closed-form count");
      }
      return r;
    }

    std::uint64_t pow2(int e) {
      if (e < 0) {
        return 0;
      }
      if (e >= 64) {
        throw OverflowError("2^" + std::to_string(e) + " does not fit");
      }
      return std::uint64_t(1) << e;
    }

    // Triangle entry at (row, k) for a triangle whose first stored row is
    // first_row and whose row r has r - first_row + 1 entries.
    std::optional<std::uint64_t> triangle(std::span<std::uint64_t const> t,
                                          int first_row,
                                          int row,
                                          int k,
                                          int k_offset) {
      if (row < first_row || k < k_offset || k - k_offset > row - first_row) {
        return std::nullopt;
      }
      std::size_t start = 0;
      for (int r = first_row; r < row; ++r) {
        start += static_cast<std::size_t>(r - first_row + 1);
      }
      std::size_t const idx = start + static_cast<std::size_t>(k - k_offset);
      if (idx >= t.size()) {
        return std::nullopt;
      }
      return t[idx];
    }

    std::uint64_t ic_essentials(int n, int p) {
      return checked_mul(n >= 1 ? n - 1 : 0, binomial(n - 2, p - 1));
    }

    std::uint64_t q_essentials(int n, int p) {
      return checked_mul(n >= 2 ? n - 2 : 0, binomial(n - 3, p - 1));
    }
  }  // namespace

  std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
      return 0;
    }
    if (k > n - k) {
      k = n - k;
    }
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
      result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
      if (result > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError("C(" + std::to_string(n) + ", " + std::to_string(k)
                            + ") does not fit in 64 bits");
      }
    }
    return static_cast<std::uint64_t>(result);
  }

  std::uint64_t catalan(int n) {
    if (n < 1) {
      throw RangeError("Catalan number c_n needs n >= 1, got "
                       + std::to_string(n));
    }
    std::uint64_t const c = binomial(2 * n, n - 1);
    if (c % static_cast<std::uint64_t>(n) != 0) {
      throw Error("C(2n, n - 1) is not divisible by n");
    }
    return c / static_cast<std::uint64_t>(n);
  }

  std::uint64_t t(int n) {
    std::uint64_t const difference = catalan(n + 1) - catalan(n);
    std::uint64_t const numerator  = checked_mul(3, binomial(2 * n, n - 1));
    if (numerator % static_cast<std::uint64_t>(n + 2) != 0
        || numerator / static_cast<std::uint64_t>(n + 2) != difference) {
      throw Error("closed forms of t_" + std::to_string(n) + " disagree");
    }
    return difference;
  }

  std::optional<std::uint64_t> rank_formula(FamilySpec const& spec) {
    int const n = spec.n;
    switch (spec.kind) {
      case FamilyKind::ic:
        return checked_mul(2, n);
      case FamilyKind::qprime:
        if (n <= 1) {
          return std::nullopt;
        }
        return static_cast<std::uint64_t>(n * n - 3 * n + 4);
      case FamilyKind::k_ideal:
      case FamilyKind::rees_ic: {
        int const p = spec.p.value_or(0);
        if (p < 1 || p > n - 1) {
          return std::nullopt;
        }
        return checked_add(ic_essentials(n, p), binomial(n, p));
      }
      case FamilyKind::m_ideal:
      case FamilyKind::rees_q: {
        int const p = spec.p.value_or(0);
        if (p < 1 || p > n - 2) {
          return std::nullopt;
        }
        return checked_add(binomial(n, p), q_essentials(n, p));
      }
      case FamilyKind::sym_inv:
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::string_view to_string(CountKind kind) noexcept {
    switch (kind) {
      case CountKind::idempotents:
        return "idempotents";
      case CountKind::essentials:
        return "essentials";
      case CountKind::requisites:
        return "requisites";
      case CountKind::generators:
        return "generators";
      case CountKind::maximal:
        return "maximal";
      case CountKind::l_star_classes:
        return "lstar-classes";
      case CountKind::r_star_classes:
        return "rstar-classes";
    }
    return "?";
  }

  std::optional<std::uint64_t> count_formula(CountKind          kind,
                                             FamilySpec const&  spec,
                                             std::optional<int> p) {
    int const  n       = spec.n;
    bool const q_side  = is_qprime_side(spec.kind);
    bool const rees    = is_rees(spec.kind);
    bool const ic_like = spec.kind == FamilyKind::ic
                         || spec.kind == FamilyKind::k_ideal
                         || spec.kind == FamilyKind::rees_ic;
    if (!q_side && !ic_like) {
      return std::nullopt;
    }
    if (rees && !p) {
      p = spec.p;
    }
    // Ideals only contain heights up to their bound.
    if (p && spec.p && !rees && *p > *spec.p) {
      return 0;
    }
    switch (kind) {
      case CountKind::idempotents:
        if (p) {
          return q_side ? binomial(n - 1, *p) : binomial(n, *p);
        }
        if (spec.kind == FamilyKind::ic) {
          return pow2(n);
        }
        if (spec.kind == FamilyKind::qprime) {
          return pow2(n - 1);
        }
        return std::nullopt;
      case CountKind::essentials:
        if (p) {
          if (*p < 1 || *p > n - 1) {
            return 0;
          }
          return q_side ? q_essentials(n, *p) : ic_essentials(n, *p);
        }
        if (spec.kind == FamilyKind::ic) {
          return n >= 2 ? checked_mul(n - 1, pow2(n - 2)) : 0;
        }
        return std::nullopt;
      case CountKind::requisites:
        if (!q_side || !p) {
          return std::nullopt;
        }
        if (*p < 1 || *p > n - 1) {
          return 0;
        }
        return binomial(n - 1, *p - 1);
      case CountKind::generators:
        if (!p || !rees) {
          return std::nullopt;
        }
        if (q_side) {
          return checked_add(binomial(n, *p), q_essentials(n, *p));
        }
        return checked_add(ic_essentials(n, *p), binomial(n, *p));
      case CountKind::maximal:
        if (spec.kind == FamilyKind::ic) {
          return checked_mul(2, n);
        }
        if (spec.kind == FamilyKind::qprime && n > 1) {
          return static_cast<std::uint64_t>(n * n - 3 * n + 4);
        }
        return std::nullopt;
      case CountKind::l_star_classes:
        if (!p) {
          return std::nullopt;
        }
        return binomial(n, *p);
      case CountKind::r_star_classes:
        if (!p) {
          return std::nullopt;
        }
        return q_side ? binomial(n - 1, *p) : binomial(n, *p);
    }
    return std::nullopt;
  }

  std::optional<std::uint64_t> SequencePrefix::at(int i) const {
    if (i < offset || static_cast<std::size_t>(i - offset) >= terms.size()) {
      return std::nullopt;
    }
    return terms[static_cast<std::size_t>(i - offset)];
  }

  SequencePrefix a000245() {
    return {"A000245", 0, kA000245};
  }
  SequencePrefix a001787() {
    return {"A001787", 0, kA001787};
  }
  SequencePrefix a000108() {
    return {"A000108", 0, kA000108};
  }
  SequencePrefix a007318() {
    return {"A007318", 0, kA007318};
  }
  SequencePrefix a003506() {
    return {"A003506", 1, kA003506};
  }

  std::optional<std::uint64_t> pascal_entry(int row, int k) {
    return triangle(kA007318, 0, row, k, 0);
  }

  std::optional<std::uint64_t> a003506_entry(int row, int k) {
    return triangle(kA003506, 1, row, k, 1);
  }

}  // namespace catalan::formulas
