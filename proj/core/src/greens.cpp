#include "catalan/greens.hpp"

#include <array>

namespace catalan {

  namespace {
    constexpr std::array<std::pair<Relation, std::string_view>, 10> kNames{{
        {Relation::L, "L"},
        {Relation::R, "R"},
        {Relation::H, "H"},
        {Relation::D, "D"},
        {Relation::J, "J"},
        {Relation::Ls, "Ls"},
        {Relation::Rs, "Rs"},
        {Relation::Hs, "Hs"},
        {Relation::Ds, "Ds"},
        {Relation::Js, "Js"},
    }};

    // Kernel of x -> f(x) over S^1, encoded as "first x' with equal value".
    template <typename Mult>
    std::vector<Index> kernel_signature(SemigroupTable const& S,
                                        Index                 a,
                                        Mult&&                mult) {
      std::size_t const  n         = S.size();
      bool const         adjoin    = !S.identity_index().has_value();
      std::size_t const  domain    = adjoin ? n + 1 : n;
      std::vector<Index> values(domain);
      for (Index x = 0; x < n; ++x) {
        values[x] = mult(a, x);
      }
      if (adjoin) {
        values[n] = a;
      }
      std::vector<Index> first_seen(n, static_cast<Index>(domain));
      std::vector<Index> signature(domain);
      for (Index x = 0; x < domain; ++x) {
        auto& slot = first_seen[values[x]];
        if (slot == domain) {
          slot = x;
        }
        signature[x] = slot;
      }
      return signature;
    }
  }  // namespace

  std::string_view to_string(Relation r) noexcept {
    for (auto [rel, name] : kNames) {
      if (rel == r) {
        return name;
      }
    }
    return "?";
  }

  std::optional<Relation> relation_from_string(std::string_view name) {
    for (auto [rel, n] : kNames) {
      if (n == name) {
        return rel;
      }
    }
    return std::nullopt;
  }

  bool is_starred(Relation r) noexcept {
    return r == Relation::Ls || r == Relation::Rs || r == Relation::Hs
           || r == Relation::Ds || r == Relation::Js;
  }

  std::vector<DynamicBitset> principal_left_ideals(SemigroupTable const& S) {
    std::vector<DynamicBitset> result(S.size(), DynamicBitset(S.size()));
    for (Index a = 0; a < S.size(); ++a) {
      result[a].set(a);
      for (Index x = 0; x < S.size(); ++x) {
        result[a].set(S.product(x, a));
      }
    }
    return result;
  }

  std::vector<DynamicBitset> principal_right_ideals(SemigroupTable const& S) {
    std::vector<DynamicBitset> result(S.size(), DynamicBitset(S.size()));
    for (Index a = 0; a < S.size(); ++a) {
      result[a].set(a);
      for (Index x = 0; x < S.size(); ++x) {
        result[a].set(S.product(a, x));
      }
    }
    return result;
  }

  std::vector<DynamicBitset> principal_ideals(SemigroupTable const& S) {
    auto left  = principal_left_ideals(S);
    auto right = principal_right_ideals(S);
    // S^1 a S^1 is the union of the right ideals of members of S^1 a.
    std::vector<DynamicBitset> result(S.size(), DynamicBitset(S.size()));
    for (Index a = 0; a < S.size(); ++a) {
      left[a].for_each([&](std::size_t b) { result[a] |= right[b]; });
    }
    return result;
  }

  IndexPartition green(SemigroupTable const& S, Relation which) {
    switch (which) {
      case Relation::L:
        return IndexPartition::from_keys(principal_left_ideals(S));
      case Relation::R:
        return IndexPartition::from_keys(principal_right_ideals(S));
      case Relation::H:
        return meet(green(S, Relation::L), green(S, Relation::R));
      case Relation::D:
        return join(green(S, Relation::L), green(S, Relation::R));
      case Relation::J:
        return IndexPartition::from_keys(principal_ideals(S));
      default:
        return relation_partition(S, which);
    }
  }

  IndexPartition starred_L(SemigroupTable const& S) {
    std::vector<std::vector<Index>> keys;
    keys.reserve(S.size());
    for (Index a = 0; a < S.size(); ++a) {
      keys.push_back(kernel_signature(
          S, a, [&S](Index a, Index x) { return S.product(a, x); }));
    }
    return IndexPartition::from_keys(keys);
  }

  IndexPartition starred_R(SemigroupTable const& S) {
    std::vector<std::vector<Index>> keys;
    keys.reserve(S.size());
    for (Index a = 0; a < S.size(); ++a) {
      keys.push_back(kernel_signature(
          S, a, [&S](Index a, Index x) { return S.product(x, a); }));
    }
    return IndexPartition::from_keys(keys);
  }

  IndexPartition starred_H(SemigroupTable const& S) {
    return meet(starred_L(S), starred_R(S));
  }

  IndexPartition starred_D(SemigroupTable const& S) {
    return join(starred_L(S), starred_R(S));
  }

  std::vector<DynamicBitset> star_ideals(SemigroupTable const& S) {
    auto const ideals = principal_ideals(S);
    auto const Ls     = starred_L(S);
    auto const Rs     = starred_R(S);

    std::vector<DynamicBitset> result;
    result.reserve(S.size());
    for (Index a = 0; a < S.size(); ++a) {
      DynamicBitset current(S.size());
      current.set(a);
      while (true) {
        DynamicBitset next(S.size());
        current.for_each([&](std::size_t b) { next |= ideals[b]; });
        DynamicBitset saturated = next;
        next.for_each([&](std::size_t b) {
          for (auto x : Ls.class_containing(static_cast<Index>(b))) {
            saturated.set(x);
          }
          for (auto x : Rs.class_containing(static_cast<Index>(b))) {
            saturated.set(x);
          }
        });
        if (saturated == current) {
          break;
        }
        current = std::move(saturated);
      }
      result.push_back(std::move(current));
    }
    return result;
  }

  IndexPartition starred_J(SemigroupTable const& S) {
    return IndexPartition::from_keys(star_ideals(S));
  }

  IndexPartition relation_partition(SemigroupTable const& S, Relation which) {
    switch (which) {
      case Relation::Ls:
        return starred_L(S);
      case Relation::Rs:
        return starred_R(S);
      case Relation::Hs:
        return starred_H(S);
      case Relation::Ds:
        return starred_D(S);
      case Relation::Js:
        return starred_J(S);
      default:
        return green(S, which);
    }
  }

}  // namespace catalan
