#include "catalan/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "catalan/errors.hpp"
#include "catalan/formulas.hpp"
#include "catalan/genrank.hpp"
#include "catalan/greens.hpp"
#include "catalan/structure.hpp"

namespace catalan {

  namespace {
    using formulas::binomial;

    std::string join_counts(std::vector<std::uint64_t> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(v[i]);
      }
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    class Recorder {
     public:
      explicit Recorder(VerificationReport& report) : _report(report) {}

      template <typename T>
      void assert_eq(std::string id,
                     std::string location,
                     std::string family,
                     T const&    expected,
                     T const&    computed) {
        add(std::move(id), std::move(location), std::move(family),
            str(expected), str(computed),
            expected == computed ? ClaimStatus::pass : ClaimStatus::fail);
      }

      // A disagreement is recorded but does not fail the run.
      template <typename T>
      void report_eq(std::string id,
                     std::string location,
                     std::string family,
                     T const&    expected,
                     T const&    computed) {
        add(std::move(id), std::move(location), std::move(family),
            str(expected), str(computed),
            expected == computed ? ClaimStatus::pass
                                 : ClaimStatus::paper_inconsistent);
      }

      void skip(std::string id,
                std::string location,
                std::string family,
                std::string reason) {
        add(std::move(id), std::move(location), std::move(family), "-",
            std::move(reason), ClaimStatus::skipped);
      }

     private:
      static std::string str(std::string const& s) {
        return s;
      }
      static std::string str(char const* s) {
        return s;
      }
      static std::string str(bool b) {
        return yes_no(b);
      }
      template <typename T>
      static std::string str(T const& v) {
        return std::to_string(v);
      }

      void add(std::string id,
               std::string location,
               std::string family,
               std::string expected,
               std::string computed,
               ClaimStatus status) {
        _report.rows.push_back({std::move(id), std::move(location),
                                std::move(family), std::move(expected),
                                std::move(computed), status});
      }

      VerificationReport& _report;
    };

    // Per-height counts of elements satisfying pred, heights 0..n.
    template <typename Pred>
    std::vector<std::uint64_t> per_height(SemigroupTable const& S,
                                          int                   n,
                                          Pred&&                pred) {
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
      for (Index i = 0; i < S.size(); ++i) {
        if (!S.is_zero_sentinel(i) && pred(i)) {
          ++counts[static_cast<std::size_t>(S.height(i))];
        }
      }
      return counts;
    }

    std::uint64_t total(std::vector<std::uint64_t> const& v) {
      std::uint64_t t = 0;
      for (auto x : v) {
        t += x;
      }
      return t;
    }

    template <typename Key>
    IndexPartition keyed(SemigroupTable const& S, Key&& key) {
      using K = decltype(key(Index{0}));
      std::vector<std::pair<bool, K>> keys;
      keys.reserve(S.size());
      for (Index i = 0; i < S.size(); ++i) {
        if (S.is_zero_sentinel(i)) {
          keys.emplace_back(true, K{});
        } else {
          keys.emplace_back(false, key(i));
        }
      }
      return IndexPartition::from_keys(keys);
    }

    bool all_discrete(SemigroupTable const& S) {
      for (auto r : {Relation::L, Relation::R, Relation::H, Relation::D,
                     Relation::J}) {
        if (!green(S, r).is_discrete()) {
          return false;
        }
      }
      return true;
    }

    void check_orders(Recorder& rec, VerifyOptions const& o) {
      auto const a000245 = formulas::a000245();
      for (int n = 1; n <= o.n_max; ++n) {
        auto const ic = SemigroupTable::enumerate(FamilySpec::ic(n), o.cap);
        auto const q  = SemigroupTable::enumerate(FamilySpec::qprime(n), o.cap);
        rec.assert_eq("order.icn", "order of IC_n is c_{n+1}", ic.name(),
                      formulas::catalan(n + 1), std::uint64_t{ic.size()});
        rec.assert_eq("order.qprime", "order of Q'_n is t_n", q.name(),
                      formulas::t(n), std::uint64_t{q.size()});
        if (auto term = a000245.at(n)) {
          rec.assert_eq("order.qprime.a000245", "order of Q'_n in A000245",
                        q.name(), *term, std::uint64_t{q.size()});
        }
        std::uint64_t with_one = 0;
        for (Index i = 0; i < ic.size(); ++i) {
          with_one += ic.element(i).defined_at(1) ? 1 : 0;
        }
        rec.assert_eq("order.qn", "order of Q_n is c_n", ic.name(),
                      formulas::catalan(n), with_one);
      }
    }

    void check_censuses(Recorder& rec, VerifyOptions const& o) {
      auto const a001787 = formulas::a001787();
      for (int n = 1; n <= o.n_max; ++n) {
        auto const spec_ic = FamilySpec::ic(n);
        auto const spec_q  = FamilySpec::qprime(n);
        auto const ic      = SemigroupTable::enumerate(spec_ic, o.cap);
        auto const q       = SemigroupTable::enumerate(spec_q, o.cap);

        auto e_ic = per_height(ic, n, [&](Index i) { return ic.is_idempotent(i); });
        auto e_q  = per_height(q, n, [&](Index i) { return q.is_idempotent(i); });
        std::vector<std::uint64_t> f_ic, f_q;
        for (int p = 0; p <= n; ++p) {
          f_ic.push_back(*formulas::count_formula(formulas::CountKind::idempotents,
                                                  spec_ic, p));
          f_q.push_back(*formulas::count_formula(formulas::CountKind::idempotents,
                                                 spec_q, p));
        }
        rec.assert_eq("idempotents.icn.height", "idempotents of height p in IC_n",
                      ic.name(), join_counts(f_ic), join_counts(e_ic));
        rec.assert_eq("idempotents.icn.total", "|E(IC_n)| = 2^n", ic.name(),
                      *formulas::count_formula(formulas::CountKind::idempotents,
                                               spec_ic),
                      total(e_ic));
        rec.assert_eq("idempotents.qprime.height",
                      "idempotents of height p in Q'_n", q.name(),
                      join_counts(f_q), join_counts(e_q));
        rec.assert_eq("idempotents.qprime.total", "|E(Q'_n)| = 2^(n-1)",
                      q.name(),
                      *formulas::count_formula(formulas::CountKind::idempotents,
                                               spec_q),
                      total(e_q));

        auto ess_ic = per_height(
            ic, n, [&](Index i) { return is_essential(ic.element(i)); });
        auto ess_q = per_height(q, n, [&](Index i) {
          return is_essential(q.element(i)) && !is_requisite(q.element(i));
        });
        auto req_q = per_height(
            q, n, [&](Index i) { return is_requisite(q.element(i)); });
        std::vector<std::uint64_t> g_ess_ic, g_ess_q, g_req_q;
        for (int p = 0; p <= n; ++p) {
          using formulas::CountKind;
          g_ess_ic.push_back(
              *formulas::count_formula(CountKind::essentials, spec_ic, p));
          g_ess_q.push_back(
              *formulas::count_formula(CountKind::essentials, spec_q, p));
          g_req_q.push_back(
              *formulas::count_formula(CountKind::requisites, spec_q, p));
        }
        rec.assert_eq("essentials.icn.height",
                      "essential elements of height p in IC_n", ic.name(),
                      join_counts(g_ess_ic), join_counts(ess_ic));
        rec.assert_eq("essentials.icn.total", "essential elements of IC_n",
                      ic.name(),
                      *formulas::count_formula(formulas::CountKind::essentials,
                                               spec_ic),
                      total(ess_ic));
        if (auto term = a001787.at(n - 1)) {
          rec.assert_eq("essentials.icn.a001787", "essential total in A001787",
                        ic.name(), *term, total(ess_ic));
        }
        for (int p = 1; p < n; ++p) {
          auto entry = formulas::a003506_entry(n - 1, p);
          if (entry) {
            rec.assert_eq("essentials.icn.a003506",
                          "essentials of height p in A003506",
                          ic.name() + " p=" + std::to_string(p), *entry,
                          ess_ic[static_cast<std::size_t>(p)]);
          }
        }
        rec.assert_eq("essentials.qprime.height",
                      "essential elements of height p in Q'_n", q.name(),
                      join_counts(g_ess_q), join_counts(ess_q));
        rec.assert_eq("requisites.qprime.height",
                      "requisite elements of height p in Q'_n", q.name(),
                      join_counts(g_req_q), join_counts(req_q));

        for (auto const* S : {&ic, &q}) {
          auto reg = regular_elements(*S);
          rec.assert_eq("regular.idempotent", "regular elements are idempotents",
                        S->name(), std::uint64_t{S->idempotents().size()},
                        std::uint64_t{reg.size()});
        }
      }
    }

    void check_relations(Recorder& rec, VerifyOptions const& o) {
      for (int n = 1; n <= o.starred_n_max; ++n) {
        for (auto const& spec : six_families(n)) {
          auto const S = SemigroupTable::enumerate(spec, o.cap);
          rec.assert_eq("greens.trivial", "L, R, H, D, J are trivial", S.name(),
                        true, all_discrete(S));
          auto const Ls = starred_L(S);
          auto const Rs = starred_R(S);
          auto const Hs = meet(Ls, Rs);
          auto const Ds = join(Ls, Rs);
          rec.assert_eq("lstar.image", "L* is equality of images", S.name(),
                        true, Ls == image_partition(S));
          rec.assert_eq("rstar.domain", "R* is equality of domains", S.name(),
                        true, Rs == domain_partition(S));
          rec.assert_eq("hstar.identity", "H* is equality", S.name(), true,
                        Hs.is_discrete());
          rec.assert_eq("dstar.height", "D* is equality of heights", S.name(),
                        true, Ds == height_partition(S));
          if (n <= 6) {
            rec.assert_eq("jstar.dstar", "J* = D*", S.name(), true,
                          starred_J(S) == Ds);
          } else {
            rec.skip("jstar.dstar", "J* = D*", S.name(),
                     "J* saturation is limited to n <= 6");
          }
          auto const L  = BinaryRelation::from_partition(Ls);
          auto const R  = BinaryRelation::from_partition(Rs);
          auto const D  = BinaryRelation::from_partition(Ds);
          bool const ok = relations_equal(
                              relation_compose(relation_compose(R, L), R), D)
                          && relations_equal(
                              relation_compose(relation_compose(L, R), L), D);
          rec.assert_eq("dstar.compose", "D* = R*oL*oR* = L*oR*oL*", S.name(),
                        true, ok);
          rec.assert_eq("rstar.unique-idempotent",
                        "each R*-class has one idempotent", S.name(), true,
                        unique_idempotent_per_r_class(S).holds);

          switch (spec.kind) {
            case FamilyKind::ic:
              if (n >= 2) {
                rec.assert_eq("ample.icn", "IC_n is ample", S.name(), true,
                              is_ample(S).holds);
              }
              break;
            case FamilyKind::qprime:
              rec.assert_eq("rightample.qprime", "Q'_n is right ample",
                            S.name(), true, is_right_ample(S).holds);
              if (n >= 2) {
                rec.assert_eq("leftabundant.qprime",
                              "Q'_n is not left abundant", S.name(), false,
                              is_left_abundant(S).holds);
              }
              break;
            case FamilyKind::k_ideal:
            case FamilyKind::rees_ic:
              rec.assert_eq("abundant.ideal", "K(n,p) and RIC_n(p) are abundant",
                            S.name(), true, is_abundant(S).holds);
              break;
            case FamilyKind::m_ideal:
            case FamilyKind::rees_q:
              rec.assert_eq("rightabundant.ideal",
                            "M(n,p) and RQ'_n(p) are right abundant", S.name(),
                            true, is_right_abundant(S).holds);
              if (n >= 2) {
                rec.assert_eq("leftabundant.ideal",
                              "M(n,p) and RQ'_n(p) are not left abundant",
                              S.name(), false, is_left_abundant(S).holds);
              }
              break;
            case FamilyKind::sym_inv:
              break;
          }
        }
        if (n <= 4) {
          auto const I  = SemigroupTable::enumerate(FamilySpec::sym_inv(n), o.cap);
          auto const ic = SemigroupTable::enumerate(FamilySpec::ic(n), o.cap);
          auto const q  = SemigroupTable::enumerate(FamilySpec::qprime(n), o.cap);
          rec.assert_eq("inverseideal.icn", "IC_n is an inverse ideal of I_n",
                        ic.name(), true, is_inverse_ideal(ic, I).holds);
          rec.assert_eq("rightinverseideal.qprime",
                        "Q'_n is a right inverse ideal of I_n", q.name(), true,
                        is_right_inverse_ideal(q, I).holds);
        }
      }
    }

    void check_noncommutation(Recorder& rec, VerifyOptions const& o) {
      struct Witness {
        FamilySpec  spec;
        char const* alpha;
        char const* beta;
      };
      for (auto const& w : {Witness{FamilySpec::ic(2), "2:1>1", "2:2>2"},
                            Witness{FamilySpec::qprime(3), "3:2>2", "3:3>3"}}) {
        auto const S = SemigroupTable::enumerate(w.spec, o.cap);
        auto const L = BinaryRelation::from_partition(starred_L(S));
        auto const R = BinaryRelation::from_partition(starred_R(S));
        Index const a = *S.index_of_text(w.alpha);
        Index const b = *S.index_of_text(w.beta);
        bool const in_lr = relation_compose(L, R).contains(a, b);
        bool const in_rl = relation_compose(R, L).contains(a, b);
        rec.assert_eq("noncommute", "L*oR* and R*oL* differ",
                      S.name() + " " + w.alpha + " " + w.beta,
                      std::string("in L*oR* only"),
                      std::string(in_lr && !in_rl ? "in L*oR* only"
                                  : in_lr         ? "in both"
                                  : in_rl         ? "in R*oL* only"
                                                  : "in neither"));
      }
    }

    void check_ranks(Recorder& rec, VerifyOptions const& o) {
      int const n_max = std::min(o.n_max, 6);
      for (int n = 2; n <= n_max; ++n) {
        std::vector<FamilySpec> specs{FamilySpec::ic(n), FamilySpec::qprime(n)};
        for (int p = 1; p <= n - 1; ++p) {
          specs.push_back(FamilySpec::k_ideal(n, p));
          specs.push_back(FamilySpec::rees_ic(n, p));
        }
        for (int p = 1; p <= n - 2; ++p) {
          specs.push_back(FamilySpec::m_ideal(n, p));
          specs.push_back(FamilySpec::rees_q(n, p));
        }
        for (auto const& spec : specs) {
          auto const report = rank_check(spec, o.cap);
          if (!report.formula) {
            continue;
          }
          if (spec.kind == FamilyKind::qprime && n >= 5) {
            rec.report_eq("rank", "rank of Q'_n", report.family, *report.formula,
                          std::uint64_t{report.rank});
          } else {
            rec.assert_eq("rank", "rank formula", report.family, *report.formula,
                          std::uint64_t{report.rank});
          }
        }
      }
    }

    void check_maximal(Recorder& rec, VerifyOptions const& o) {
      int const n_max = std::min(o.n_max, o.maximal_n_max);
      for (int n = 2; n <= n_max; ++n) {
        for (auto const& spec : {FamilySpec::ic(n), FamilySpec::qprime(n)}) {
          auto const S   = SemigroupTable::enumerate(spec, o.cap);
          auto const max = maximal_subsemigroups(S);
          std::uint64_t verified = 0;
          for (auto const& m : max) {
            verified += m.maximal ? 1 : 0;
          }
          rec.assert_eq("maximal.verified", "each S\\{g} is maximal", S.name(),
                        std::uint64_t{max.size()}, verified);
          if (S.size() <= 16) {
            rec.assert_eq("maximal.exhaustive",
                          "no other maximal subsemigroups", S.name(),
                          std::uint64_t{max.size()},
                          std::uint64_t{maximal_subsemigroups_exhaustive(S).size()});
          }
          auto const expected = *formulas::count_formula(
              formulas::CountKind::maximal, spec);
          if (spec.kind == FamilyKind::qprime && n >= 5) {
            rec.report_eq("maximal.count", "maximal subsemigroups of Q'_n",
                          S.name(), expected, std::uint64_t{max.size()});
          } else {
            rec.assert_eq("maximal.count", "maximal subsemigroup count",
                          S.name(), expected, std::uint64_t{max.size()});
          }
        }
      }
    }

    void check_factorizations_rows(Recorder& rec, VerifyOptions const& o) {
      int const n_max = std::min(o.n_max, 5);
      for (int n = 1; n <= n_max; ++n) {
        for (auto const& spec : {FamilySpec::ic(n), FamilySpec::qprime(n)}) {
          auto f = check_factorizations(spec);
          rec.assert_eq("factor.roundtrip", "factorizations recompose",
                        spec.name(), std::string("0 failures"),
                        std::to_string(f.failed) + " failures"
                            + (f.failed ? " (" + f.first_failure + ")" : ""));
          auto l = check_height_lifting(spec);
          rec.assert_eq("factor.lift", "height lifting recomposes", spec.name(),
                        std::string("0 failures"),
                        std::to_string(l.failed) + " failures"
                            + (l.failed ? " (" + l.first_failure + ")" : ""));
        }
      }
    }

    bool is_q_factor_kind(PartialInjection const& f) {
      return is_idempotent(f) || is_essential(f);
    }
  }  // namespace

  std::string_view to_string(ClaimStatus status) noexcept {
    switch (status) {
      case ClaimStatus::pass:
        return "pass";
      case ClaimStatus::fail:
        return "fail";
      case ClaimStatus::paper_inconsistent:
        return "paper-inconsistent";
      case ClaimStatus::skipped:
        return "skipped";
    }
    return "?";
  }

  std::size_t VerificationReport::count(ClaimStatus status) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(),
                      [&](ClaimRow const& r) { return r.status == status; }));
  }

  IndexPartition image_partition(SemigroupTable const& S) {
    return keyed(S, [&](Index i) { return S.element(i).image_mask(); });
  }

  IndexPartition domain_partition(SemigroupTable const& S) {
    return keyed(S, [&](Index i) { return S.element(i).domain_mask(); });
  }

  IndexPartition height_partition(SemigroupTable const& S) {
    return keyed(S, [&](Index i) { return S.height(i); });
  }

  std::vector<FamilySpec> six_families(int n) {
    std::vector<FamilySpec> result{FamilySpec::ic(n), FamilySpec::qprime(n)};
    for (int p = 1; p <= n; ++p) {
      result.push_back(FamilySpec::k_ideal(n, p));
      result.push_back(FamilySpec::rees_ic(n, p));
    }
    for (int p = 1; p <= n - 1; ++p) {
      result.push_back(FamilySpec::m_ideal(n, p));
      result.push_back(FamilySpec::rees_q(n, p));
    }
    return result;
  }

  FactorizationTally check_factorizations(FamilySpec const& spec) {
    if (spec.kind != FamilyKind::ic && spec.kind != FamilyKind::qprime) {
      throw ValidationError("factorization checks cover icn and qprime only");
    }
    bool const         q = spec.kind == FamilyKind::qprime;
    FactorizationTally tally;
    auto fail = [&](PartialInjection const& alpha, std::string const& why) {
      if (tally.failed++ == 0) {
        tally.first_failure = canonical_text(alpha) + ": " + why;
      }
    };
    for (auto const& alpha : enumerate_members(spec)) {
      ++tally.checked;
      int const n = alpha.degree();
      if (alpha.height() == 0) {
        if (!factor_into_generators(alpha).empty()) {
          fail(alpha, "empty map has factors");
        }
        continue;
      }
      std::vector<PartialInjection> factors;
      PartialInjection              lead = alpha;
      std::optional<PartialInjection> requisite;
      if (q && (alpha.image_mask() & 1u)) {
        auto rf   = factor_requisite(alpha);
        lead      = rf.beta;
        requisite = rf.requisite;
        if (rf.beta.domain_mask() != alpha.domain_mask()
            || (rf.beta.image_mask() & 1u) || !is_requisite(rf.requisite)
            || rf.requisite.image_mask() != alpha.image_mask()) {
          fail(alpha, "requisite factorization has the wrong shape");
          continue;
        }
      }
      factors = factor_into_generators(lead);
      if (requisite) {
        factors.push_back(*requisite);
      }
      PartialInjection product = PartialInjection::identity(n);
      bool             ok      = true;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        auto const& f = factors[k];
        bool const  last_requisite = requisite && k + 1 == factors.size();
        ok = ok && f.height() == alpha.height() && is_member(f, spec)
             && (last_requisite || is_q_factor_kind(f));
        product = product * f;
      }
      if (!ok) {
        fail(alpha, "factor of the wrong kind or height");
      } else if (product != alpha) {
        fail(alpha, "product is " + canonical_text(product));
      }
    }
    return tally;
  }

  FactorizationTally check_height_lifting(FamilySpec const& spec) {
    if (spec.kind != FamilyKind::ic && spec.kind != FamilyKind::qprime) {
      throw ValidationError("height lifting covers icn and qprime only");
    }
    bool const         q = spec.kind == FamilyKind::qprime;
    FactorizationTally tally;
    for (auto const& alpha : enumerate_members(spec)) {
      int const  n     = alpha.degree();
      int const  bound = q ? n - 3 : n - 2;
      bool const eligible
          = alpha.height() <= bound
            && (is_idempotent(alpha) || is_essential(alpha)
                || (q && is_requisite(alpha)));
      if (!eligible) {
        continue;
      }
      ++tally.checked;
      auto const [a, b] = lift_height(alpha, spec.kind);
      bool const ok = a.height() == alpha.height() + 1
                      && b.height() == alpha.height() + 1 && is_member(a, spec)
                      && is_member(b, spec) && a * b == alpha;
      if (!ok && tally.failed++ == 0) {
        tally.first_failure = canonical_text(alpha);
      }
    }
    return tally;
  }

  VerificationReport run_verification(VerifyOptions const& options) {
    if (options.n_max < 1 || options.starred_n_max < 1) {
      throw RangeError("verification sizes must be at least 1");
    }
    if (options.n_max > options.cap || options.starred_n_max > options.cap) {
      throw ResourceError("verification size exceeds the enumeration cap "
                          + std::to_string(options.cap));
    }
    VerificationReport report;
    Recorder           rec(report);
    check_orders(rec, options);
    check_censuses(rec, options);
    check_relations(rec, options);
    check_noncommutation(rec, options);
    check_ranks(rec, options);
    check_maximal(rec, options);
    check_factorizations_rows(rec, options);
    return report;
  }

}  // namespace catalan
