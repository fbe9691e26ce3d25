// catalan_lab: enumerate IC_n, Q'_n and their ideals and Rees quotients,
// and check relations, properties, ranks and factorizations.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <typeinfo>
#include <vector>

#include <CLI11.hpp>

#include "catalan/errors.hpp"
#include "catalan/families.hpp"
#include "catalan/genrank.hpp"
#include "catalan/greens.hpp"
#include "catalan/io.hpp"
#include "catalan/pinj.hpp"
#include "catalan/structure.hpp"
#include "catalan/verify.hpp"

namespace {

  using namespace catalan;

  constexpr int kExitFail     = 1;
  constexpr int kExitUsage    = 2;
  constexpr int kExitResource = 3;

  constexpr int kHardCeiling       = 12;
  constexpr int kDefaultCap        = 10;
  constexpr int kDefaultStarredCap = 5;
  constexpr int kJStarCeiling      = 6;
  constexpr int kDefaultMaximalCap = 6;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  enum class Format { human, json, csv };

  struct Globals {
    std::string        format = "human";
    std::optional<int> cap;
    int                starred_cap = kDefaultStarredCap;
    int                maximal_cap = kDefaultMaximalCap;

    Format fmt() const {
      if (format == "json") {
        return Format::json;
      }
      if (format == "csv") {
        return Format::csv;
      }
      return Format::human;
    }
  };

  struct FamilyFlags {
    std::string        family;
    int                n = 0;
    std::optional<int> p;
  };

  int env_cap() {
    char const* raw = std::getenv("CATALAN_LAB_MAX_N");
    if (raw == nullptr || *raw == '\0') {
      return kDefaultCap;
    }
    std::string_view s(raw);
    int              value = 0;
    auto [ptr, ec]         = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
      throw UsageError("CATALAN_LAB_MAX_N must be a positive integer, got '"
                       + std::string(s) + "'");
    }
    return value;
  }

  int enumeration_cap(Globals const& g) {
    int const cap = g.cap.value_or(env_cap());
    if (cap > kHardCeiling) {
      throw ResourceError("cap " + std::to_string(cap)
                          + " exceeds the hard ceiling n = "
                          + std::to_string(kHardCeiling));
    }
    return cap;
  }

  void require_n(int n, int cap, std::string const& what) {
    if (n > cap) {
      throw ResourceError(what + " is limited to n <= " + std::to_string(cap)
                          + ", got n = " + std::to_string(n));
    }
  }

  FamilySpec make_spec(FamilyFlags const& f) {
    auto kind = family_kind_from_string(f.family);
    if (!kind) {
      throw UsageError("unknown family '" + f.family
                       + "' (expected icn, qprime, syminv, kideal, mideal, "
                         "reesic or reesq)");
    }
    FamilySpec spec{*kind, f.n, f.p};
    spec.validate();
    return spec;
  }

  SemigroupTable load(Globals const& g, FamilyFlags const& f) {
    auto const spec = make_spec(f);
    int const  cap  = enumeration_cap(g);
    require_n(spec.n, cap, "enumeration");
    return SemigroupTable::enumerate(spec, cap);
  }

  void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--family", f.family,
                    "icn, qprime, syminv, kideal, mideal, reesic or reesq")
        ->required();
    cmd->add_option("--n", f.n, "chain size")->required()->check(CLI::Range(1, 16));
    cmd->add_option("--p", f.p, "height bound for ideals and Rees quotients");
  }

  std::string brace(SemigroupTable const& S, std::vector<Index> const& c) {
    std::string out = "{";
    for (std::size_t k = 0; k < c.size(); ++k) {
      out += (k ? ", " : "") + S.text(c[k]);
    }
    return out + "}";
  }

  std::string list(std::vector<std::string> const& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out += (k ? " " : "") + v[k];
    }
    return out;
  }

  int cmd_enum(Globals const& g, FamilyFlags const& f, bool count_only,
               bool products) {
    auto const S = load(g, f);
    switch (g.fmt()) {
      case Format::json:
        if (count_only) {
          std::cout << "{\n  \"family\": \"" << S.name()
                    << "\",\n  \"order\": " << S.size() << "\n}\n";
        } else {
          std::cout << io::table_json(S);
        }
        break;
      case Format::csv:
        if (count_only) {
          std::cout << "family,order\n" << io::csv_field(S.name()) << ','
                    << S.size() << '\n';
        } else if (products) {
          std::cout << io::products_csv(S);
        } else {
          std::cout << "index,element\n";
          for (Index i = 0; i < S.size(); ++i) {
            std::cout << i << ',' << S.text(i) << '\n';
          }
        }
        break;
      case Format::human:
        if (count_only) {
          std::cout << S.size() << '\n';
        } else {
          std::cout << S.name() << ": " << S.size() << " elements\n";
          for (Index i = 0; i < S.size(); ++i) {
            std::cout << "  " << i << "  " << S.text(i) << '\n';
          }
        }
        break;
    }
    return 0;
  }

  int cmd_greens(Globals const& g, FamilyFlags const& f, std::string const& rel) {
    auto which = relation_from_string(rel);
    if (!which) {
      throw UsageError("unknown relation '" + rel
                       + "' (expected L, R, H, D, J, Ls, Rs, Hs, Ds or Js)");
    }
    if (is_starred(*which)) {
      int const limit = *which == Relation::Js
                            ? std::min(g.starred_cap, kJStarCeiling)
                            : g.starred_cap;
      require_n(f.n, limit, "starred relation " + rel);
    }
    auto const S = load(g, f);
    auto const P = relation_partition(S, *which);
    switch (g.fmt()) {
      case Format::json:
        std::cout << io::eggbox_json(S, *which, P);
        break;
      case Format::csv:
        std::cout << io::eggbox_csv(S, *which, P);
        break;
      case Format::human:
        std::cout << rel << " on " << S.name() << ": " << P.class_count()
                  << " classes, largest has " << P.max_class_size() << '\n';
        for (auto const& c : P.classes()) {
          std::cout << "  " << brace(S, c) << '\n';
        }
        break;
    }
    return 0;
  }

  PropertyReport run_property(SemigroupTable const& S, Globals const& g,
                              std::string const& name) {
    if (name == "regular") {
      return is_regular_semigroup(S);
    }
    if (name == "jtrivial") {
      return is_j_trivial(S);
    }
    if (name == "semilattice") {
      return is_semilattice_of_idempotents(S);
    }
    if (name == "inverse-ideal" || name == "right-inverse-ideal") {
      require_n(S.family()->n, std::min(enumeration_cap(g), 6), name);
      auto const I = SemigroupTable::enumerate(FamilySpec::sym_inv(S.family()->n),
                                               enumeration_cap(g));
      return name == "inverse-ideal" ? is_inverse_ideal(S, I)
                                     : is_right_inverse_ideal(S, I);
    }
    require_n(S.family()->n, g.starred_cap, "property " + name);
    if (name == "left-abundant") {
      return is_left_abundant(S);
    }
    if (name == "right-abundant") {
      return is_right_abundant(S);
    }
    if (name == "abundant") {
      return is_abundant(S);
    }
    if (name == "adequate") {
      return is_adequate(S);
    }
    if (name == "right-adequate") {
      return is_right_adequate(S);
    }
    if (name == "ample") {
      return is_ample(S);
    }
    if (name == "right-ample") {
      return is_right_ample(S);
    }
    throw UsageError("unknown property '" + name + "'");
  }

  int cmd_check(Globals const& g, FamilyFlags const& f,
                std::vector<std::string> const& properties,
                std::optional<bool> expect) {
    auto const S = load(g, f);
    std::vector<PropertyReport> reports;
    for (auto const& name : properties) {
      reports.push_back(run_property(S, g, name));
    }
    bool matched = true;
    for (auto const& r : reports) {
      matched = matched && (!expect || r.holds == *expect);
    }
    switch (g.fmt()) {
      case Format::json:
        std::cout << io::properties_json(reports);
        break;
      case Format::csv:
        std::cout << io::properties_csv(reports);
        break;
      case Format::human:
        for (auto const& r : reports) {
          std::cout << r.property << " (" << r.family
                    << "): " << (r.holds ? "holds" : "fails");
          if (!r.holds) {
            std::cout << "; " << r.note << "; witness " << list(r.witness);
          }
          std::cout << '\n';
        }
        break;
    }
    return matched ? 0 : kExitFail;
  }

  int cmd_rank(Globals const& g, FamilyFlags const& f, bool show) {
    auto const S = load(g, f);
    auto const r = minimal_generating_set(S);
    switch (g.fmt()) {
      case Format::json:
        std::cout << io::generators_json(r);
        break;
      case Format::csv:
        if (show) {
          std::cout << io::generators_csv(r);
        } else {
          std::cout << "family,rank,formula,agrees\n"
                    << io::csv_field(r.family) << ',' << r.rank << ','
                    << (r.formula ? std::to_string(*r.formula) : "") << ','
                    << (r.agrees ? (*r.agrees ? "true" : "false") : "") << '\n';
        }
        break;
      case Format::human:
        std::cout << "rank " << r.family << " = " << r.rank;
        if (r.formula) {
          std::cout << " (formula " << *r.formula << ", "
                    << (*r.agrees ? "agrees" : "disagrees") << ")";
        }
        if (r.greedy_fallback) {
          std::cout << " [not J-trivial: greedy minimal set, upper bound]";
        }
        std::cout << '\n';
        if (show) {
          auto group = [](char const* label, std::vector<std::string> const& v) {
            if (!v.empty()) {
              std::cout << "  " << label << ": " << list(v) << '\n';
            }
          };
          group("identity", r.identity);
          group("idempotents", r.idempotents);
          group("essentials", r.essentials);
          group("requisites", r.requisites);
          group("other", r.other);
        }
        break;
    }
    return 0;
  }

  int cmd_decompose(Globals const& g, FamilyFlags const& f,
                    std::string const& text, std::string const& mode) {
    auto const spec  = make_spec(f);
    auto const alpha = parse_text(text);
    if (alpha.degree() != spec.n) {
      throw UsageError("element has degree " + std::to_string(alpha.degree())
                       + " but --n is " + std::to_string(spec.n));
    }
    if (!is_member(alpha, spec)) {
      throw UsageError(text + " is not an element of " + spec.name());
    }
    std::vector<PartialInjection> factors;
    if (mode == "essentials") {
      factors = factor_into_generators(alpha);
    } else if (mode == "requisite") {
      auto rf = factor_requisite(alpha);
      factors = {rf.beta, rf.requisite};
    } else if (mode == "lift") {
      auto [a, b] = lift_height(alpha, spec.kind);
      factors     = {a, b};
    } else {
      throw UsageError("unknown mode '" + mode
                       + "' (expected essentials, requisite or lift)");
    }
    std::vector<std::string> texts;
    for (auto const& x : factors) {
      texts.push_back(canonical_text(x));
    }
    switch (g.fmt()) {
      case Format::json:
        std::cout << io::elements_json(texts);
        break;
      case Format::csv:
        std::cout << "position,element,kind\n";
        for (std::size_t k = 0; k < factors.size(); ++k) {
          std::cout << k + 1 << ',' << texts[k] << ','
                    << to_string(classify(factors[k])) << '\n';
        }
        break;
      case Format::human:
        for (std::size_t k = 0; k < factors.size(); ++k) {
          std::cout << texts[k] << "  " << to_string(classify(factors[k])) << '\n';
        }
        break;
    }
    return 0;
  }

  int cmd_maximal(Globals const& g, FamilyFlags const& f) {
    require_n(f.n, g.maximal_cap, "maximal subsemigroup search");
    auto const S   = load(g, f);
    auto const max = maximal_subsemigroups(S);
    switch (g.fmt()) {
      case Format::json: {
        std::cout << "{\n  \"family\": \"" << S.name() << "\",\n  \"count\": "
                  << max.size() << ",\n  \"removed\": [";
        for (std::size_t k = 0; k < max.size(); ++k) {
          std::cout << (k ? ", " : "") << '"' << S.text(max[k].removed) << '"';
        }
        std::cout << "]\n}\n";
        break;
      }
      case Format::csv:
        std::cout << "removed,closed,maximal\n";
        for (auto const& m : max) {
          std::cout << S.text(m.removed) << ',' << (m.closed ? "true" : "false")
                    << ',' << (m.maximal ? "true" : "false") << '\n';
        }
        break;
      case Format::human:
        std::cout << S.name() << ": " << max.size()
                  << " maximal subsemigroups S \\ {g}\n";
        for (auto const& m : max) {
          std::cout << "  g = " << S.text(m.removed)
                    << (m.maximal ? "" : "  (not verified)") << '\n';
        }
        break;
    }
    return 0;
  }

  int cmd_verify(Globals const& g, VerifyOptions options) {
    options.cap = enumeration_cap(g);
    require_n(options.n_max, options.cap, "verification");
    require_n(options.starred_n_max, g.starred_cap, "starred verification");
    options.maximal_n_max = std::min(options.maximal_n_max, g.maximal_cap);
    auto const report = run_verification(options);
    switch (g.fmt()) {
      case Format::json:
        std::cout << io::verification_json(report);
        break;
      case Format::csv:
        std::cout << io::verification_csv(report);
        break;
      case Format::human:
        for (auto const& r : report.rows) {
          std::cout << '[' << to_string(r.status) << "] " << r.id << ' '
                    << r.family << ": expected " << r.expected << ", computed "
                    << r.computed << "  (" << r.location << ")\n";
        }
        std::cout << report.count(ClaimStatus::pass) << " pass, "
                  << report.count(ClaimStatus::fail) << " fail, "
                  << report.count(ClaimStatus::paper_inconsistent)
                  << " paper-inconsistent, "
                  << report.count(ClaimStatus::skipped) << " skipped\n";
        break;
    }
    return report.ok() ? 0 : kExitFail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Injective partial Catalan monoids: enumeration and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--cap", g.cap,
                 "enumeration cap on n (default 10 or $CATALAN_LAB_MAX_N)");
  app.add_option("--starred-cap", g.starred_cap,
                 "cap on n for starred relations and properties");
  app.add_option("--maximal-cap", g.maximal_cap,
                 "cap on n for maximal subsemigroups");

  FamilyFlags f;
  int         status = 0;

  auto* en         = app.add_subcommand("enum", "list or count a family");
  bool  count_only = false;
  bool  products   = false;
  add_family_flags(en, f);
  en->add_flag("--count-only", count_only, "print the order only");
  en->add_flag("--products", products, "dump the product table (csv)");

  auto*       gr = app.add_subcommand("greens", "Green's and starred relations");
  std::string relation;
  add_family_flags(gr, f);
  gr->add_option("--relation", relation, "L R H D J Ls Rs Hs Ds Js")->required();

  auto*                    ck = app.add_subcommand("check", "structural properties");
  std::vector<std::string> properties;
  std::optional<bool>      expect;
  add_family_flags(ck, f);
  ck->add_option("--property", properties,
                 "regular jtrivial left-abundant right-abundant abundant "
                 "semilattice adequate right-adequate ample right-ample "
                 "inverse-ideal right-inverse-ideal")
      ->required();
  ck->add_option("--expect", expect, "expected outcome for every property");

  auto* rk   = app.add_subcommand("rank", "minimal generating set and rank");
  bool  show = false;
  add_family_flags(rk, f);
  rk->add_flag("--show-generators", show, "list the generators");

  auto*       dc = app.add_subcommand("decompose", "factor an element");
  std::string element;
  std::string mode = "essentials";
  add_family_flags(dc, f);
  dc->add_option("--element", element, "element text, e.g. 3:2>1,3>3")->required();
  dc->add_option("--mode", mode, "essentials, requisite or lift")
      ->check(CLI::IsMember({"essentials", "requisite", "lift"}));

  auto* mx = app.add_subcommand("maximal", "maximal subsemigroups");
  add_family_flags(mx, f);

  auto*         vf = app.add_subcommand("verify", "run every claim check");
  VerifyOptions vopts;
  vf->add_option("--n-max", vopts.n_max, "largest n for counts and ranks")
      ->check(CLI::PositiveNumber);
  vf->add_option("--starred-n-max", vopts.starred_n_max,
                 "largest n for relations and properties")
      ->check(CLI::PositiveNumber);
  vf->add_option("--maximal-n-max", vopts.maximal_n_max,
                 "largest n for maximal subsemigroups");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*en) {
      status = cmd_enum(g, f, count_only, products);
    } else if (*gr) {
      status = cmd_greens(g, f, relation);
    } else if (*ck) {
      status = cmd_check(g, f, properties, expect);
    } else if (*rk) {
      status = cmd_rank(g, f, show);
    } else if (*dc) {
      status = cmd_decompose(g, f, element, mode);
    } else if (*mx) {
      status = cmd_maximal(g, f);
    } else if (*vf) {
      status = cmd_verify(g, vopts);
    }
  } catch (ResourceError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (OverflowError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (catalan::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    // Every derived error type comes from bad input.
    return typeid(e) == typeid(catalan::Error) ? kExitFail : kExitUsage;
  }
  return status;
}
