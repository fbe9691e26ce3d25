#include "catalan/structure.hpp"

#include <optional>

#include "catalan/errors.hpp"
#include "catalan/greens.hpp"

namespace catalan {

  namespace {
    PropertyReport make_report(std::string property, SemigroupTable const& S) {
      PropertyReport r;
      r.property = std::move(property);
      r.family   = S.name();
      r.holds    = true;
      return r;
    }

    std::vector<std::string> texts(SemigroupTable const&     S,
                                   std::vector<Index> const& indices) {
      std::vector<std::string> result;
      result.reserve(indices.size());
      for (auto i : indices) {
        result.push_back(S.text(i));
      }
      return result;
    }

    // First class with no idempotent, if any.
    std::optional<std::vector<Index>> class_without_idempotent(
        SemigroupTable const& S,
        IndexPartition const& p) {
      for (auto const& c : p.classes()) {
        bool found = false;
        for (auto x : c) {
          found = found || S.is_idempotent(x);
        }
        if (!found) {
          return c;
        }
      }
      return std::nullopt;
    }

    PropertyReport abundance(std::string           property,
                             SemigroupTable const& S,
                             IndexPartition const& p,
                             std::string const&    which) {
      auto r = make_report(std::move(property), S);
      if (auto c = class_without_idempotent(S, p)) {
        r.holds   = false;
        r.witness = texts(S, *c);
        r.note    = which + "-class without an idempotent";
      }
      return r;
    }

    // The unique idempotent of each class, or the first class violating
    // uniqueness.
    struct ClassIdempotents {
      std::vector<Index>                rep;  // per element
      std::optional<std::vector<Index>> bad_class;
    };

    ClassIdempotents unique_idempotents(SemigroupTable const& S,
                                        IndexPartition const& p) {
      ClassIdempotents result;
      result.rep.assign(S.size(), 0);
      for (auto const& c : p.classes()) {
        std::vector<Index> idem;
        for (auto x : c) {
          if (S.is_idempotent(x)) {
            idem.push_back(x);
          }
        }
        if (idem.size() != 1) {
          if (!result.bad_class) {
            result.bad_class = c;
          }
          continue;
        }
        for (auto x : c) {
          result.rep[x] = idem.front();
        }
      }
      return result;
    }

    PropertyReport inverse_ideal(std::string           property,
                                 SemigroupTable const& sub,
                                 SemigroupTable const& super,
                                 bool                  two_sided) {
      if (!sub.has_elements() || !super.has_elements()) {
        throw ValidationError("inverse-ideal check needs element tables");
      }
      std::vector<Index> embed(sub.size());
      for (Index u = 0; u < sub.size(); ++u) {
        if (sub.is_zero_sentinel(u)) {
          throw ValidationError("table " + sub.name()
                                + " has a zero sentinel outside " + super.name());
        }
        auto k = super.index_of(sub.element(u));
        if (!k) {
          throw ValidationError(sub.text(u) + " of " + sub.name()
                                + " is not an element of " + super.name());
        }
        embed[u] = *k;
      }
      auto in_sub = [&](Index k) {
        return sub.index_of(super.element(k)).has_value();
      };
      PropertyReport r;
      r.property = std::move(property);
      r.family   = sub.name() + " in " + super.name();
      r.holds    = true;
      for (Index u = 0; u < sub.size(); ++u) {
        Index const s     = embed[u];
        bool        found = false;
        for (Index v = 0; v < super.size() && !found; ++v) {
          Index const uv = super.product(s, v);
          if (super.product(uv, s) != s || !in_sub(uv)) {
            continue;
          }
          found = !two_sided || in_sub(super.product(v, s));
        }
        if (!found) {
          r.holds   = false;
          r.witness = {sub.text(u)};
          r.note    = "no suitable u' in " + super.name();
          break;
        }
      }
      return r;
    }
  }  // namespace

  std::vector<Index> regular_elements(SemigroupTable const& S) {
    std::vector<Index> result;
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (S.product(S.product(a, b), a) == a) {
          result.push_back(a);
          break;
        }
      }
    }
    return result;
  }

  PropertyReport is_regular_semigroup(SemigroupTable const& S) {
    auto r   = make_report("regular", S);
    auto reg = regular_elements(S);
    if (reg.size() != S.size()) {
      r.holds = false;
      for (Index a = 0, k = 0; a < S.size(); ++a) {
        if (k < reg.size() && reg[k] == a) {
          ++k;
        } else {
          r.witness = {S.text(a)};
          break;
        }
      }
      r.note = "element with no b such that aba = a";
    }
    return r;
  }

  PropertyReport is_j_trivial(SemigroupTable const& S) {
    auto r = make_report("jtrivial", S);
    auto J = green(S, Relation::J);
    for (auto const& c : J.classes()) {
      if (c.size() > 1) {
        r.holds   = false;
        r.witness = texts(S, c);
        r.note    = "J-class with more than one element";
        break;
      }
    }
    return r;
  }

  PropertyReport is_left_abundant(SemigroupTable const& S) {
    return abundance("left-abundant", S, starred_L(S), "L*");
  }

  PropertyReport is_right_abundant(SemigroupTable const& S) {
    return abundance("right-abundant", S, starred_R(S), "R*");
  }

  PropertyReport is_abundant(SemigroupTable const& S) {
    auto left = is_left_abundant(S);
    if (!left.holds) {
      left.property = "abundant";
      return left;
    }
    auto right     = is_right_abundant(S);
    right.property = "abundant";
    return right;
  }

  PropertyReport is_semilattice_of_idempotents(SemigroupTable const& S) {
    auto       r = make_report("semilattice", S);
    auto const E = S.idempotents();
    for (auto e : E) {
      for (auto f : E) {
        Index const ef = S.product(e, f);
        if (!S.is_idempotent(ef)) {
          r.holds   = false;
          r.witness = {S.text(e), S.text(f)};
          r.note    = "product of idempotents is not idempotent";
          return r;
        }
        if (ef != S.product(f, e)) {
          r.holds   = false;
          r.witness = {S.text(e), S.text(f)};
          r.note    = "idempotents do not commute";
          return r;
        }
      }
    }
    return r;
  }

  PropertyReport is_adequate(SemigroupTable const& S) {
    auto r = is_abundant(S);
    if (r.holds) {
      r = is_semilattice_of_idempotents(S);
    }
    r.property = "adequate";
    return r;
  }

  PropertyReport is_right_adequate(SemigroupTable const& S) {
    auto r = is_right_abundant(S);
    if (r.holds) {
      r = is_semilattice_of_idempotents(S);
    }
    r.property = "right-adequate";
    return r;
  }

  PropertyReport is_ample(SemigroupTable const& S) {
    auto r = make_report("ample", S);
    if (auto pre = is_adequate(S); !pre.holds) {
      r.holds   = false;
      r.witness = pre.witness;
      r.note    = "precondition failed (not adequate): " + pre.note;
      return r;
    }
    auto star = unique_idempotents(S, starred_L(S));
    auto plus = unique_idempotents(S, starred_R(S));
    for (auto const* ci : {&star, &plus}) {
      if (ci->bad_class) {
        r.holds   = false;
        r.witness = texts(S, *ci->bad_class);
        r.note    = "precondition failed: starred class without a unique "
                    "idempotent";
        return r;
      }
    }
    for (auto e : S.idempotents()) {
      for (Index a = 0; a < S.size(); ++a) {
        Index const ea = S.product(e, a);
        Index const ae = S.product(a, e);
        if (ea != S.product(a, star.rep[ea])) {
          r.holds   = false;
          r.witness = {S.text(e), S.text(a)};
          r.note    = "ea != a(ea)*";
          return r;
        }
        if (ae != S.product(plus.rep[ae], a)) {
          r.holds   = false;
          r.witness = {S.text(e), S.text(a)};
          r.note    = "ae != (ae)+a";
          return r;
        }
      }
    }
    return r;
  }

  PropertyReport is_right_ample(SemigroupTable const& S) {
    auto r = make_report("right-ample", S);
    if (auto pre = is_right_adequate(S); !pre.holds) {
      r.holds   = false;
      r.witness = pre.witness;
      r.note    = "precondition failed (not right adequate): " + pre.note;
      return r;
    }
    auto plus = unique_idempotents(S, starred_R(S));
    if (plus.bad_class) {
      r.holds   = false;
      r.witness = texts(S, *plus.bad_class);
      r.note = "precondition failed: R*-class without a unique idempotent";
      return r;
    }
    for (auto e : S.idempotents()) {
      for (Index a = 0; a < S.size(); ++a) {
        Index const ae = S.product(a, e);
        if (ae != S.product(plus.rep[ae], a)) {
          r.holds   = false;
          r.witness = {S.text(e), S.text(a)};
          r.note    = "ae != (ae)+a";
          return r;
        }
      }
    }
    return r;
  }

  PropertyReport unique_idempotent_per_r_class(SemigroupTable const& S) {
    auto r  = make_report("unique-idempotent-per-R*-class", S);
    auto ci = unique_idempotents(S, starred_R(S));
    if (ci.bad_class) {
      r.holds   = false;
      r.witness = texts(S, *ci.bad_class);
      r.note    = "R*-class without exactly one idempotent";
    }
    return r;
  }

  PropertyReport is_inverse_ideal(SemigroupTable const& sub,
                                  SemigroupTable const& super) {
    return inverse_ideal("inverse-ideal", sub, super, true);
  }

  PropertyReport is_right_inverse_ideal(SemigroupTable const& sub,
                                        SemigroupTable const& super) {
    return inverse_ideal("right-inverse-ideal", sub, super, false);
  }

  IdempotentCensus idempotent_census(SemigroupTable const& S) {
    IdempotentCensus census;
    for (Index i = 0; i < S.size(); ++i) {
      if (!S.is_idempotent(i)) {
        continue;
      }
      if (S.is_zero_sentinel(i)) {
        census.zero_sentinel_idempotent = true;
        continue;
      }
      ++census.per_height[S.height(i)];
      ++census.total;
    }
    return census;
  }

}  // namespace catalan
