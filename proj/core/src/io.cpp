#include "catalan/io.hpp"

#include <json.hpp>

namespace catalan::io {

  using nlohmann::ordered_json;

  namespace {
    std::string dump(ordered_json const& j) {
      return j.dump(2) + "\n";
    }

    ordered_json texts(SemigroupTable const& S, std::vector<Index> const& idx) {
      auto arr = ordered_json::array();
      for (auto i : idx) {
        arr.push_back(S.text(i));
      }
      return arr;
    }

    ordered_json property(PropertyReport const& r) {
      ordered_json j;
      j["property"] = r.property;
      j["family"]   = r.family;
      j["holds"]    = r.holds;
      if (!r.witness.empty()) {
        j["witness"] = r.witness;
      }
      if (!r.note.empty()) {
        j["note"] = r.note;
      }
      return j;
    }

    std::string join(std::vector<std::string> const& v, char sep) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        out += v[i];
      }
      return out;
    }
  }  // namespace

  std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      return s;
    }
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') {
        out += '"';
      }
      out += c;
    }
    return out + "\"";
  }

  std::string table_json(SemigroupTable const& S) {
    ordered_json j;
    if (auto const& f = S.family()) {
      j["family"] = std::string(to_string(f->kind));
      j["n"]      = f->n;
      if (f->p) {
        j["p"] = *f->p;
      }
    } else {
      j["family"] = S.name();
    }
    j["order"]    = S.size();
    auto elements = ordered_json::array();
    for (Index i = 0; i < S.size(); ++i) {
      elements.push_back(S.text(i));
    }
    j["elements"] = std::move(elements);
    return dump(j);
  }

  std::string products_csv(SemigroupTable const& S) {
    std::string out = "i,j,k\n";
    for (Index i = 0; i < S.size(); ++i) {
      for (Index j = 0; j < S.size(); ++j) {
        out += std::to_string(i) + ',' + std::to_string(j) + ','
               + std::to_string(S.product(i, j)) + '\n';
      }
    }
    return out;
  }

  std::string eggbox_json(SemigroupTable const& S,
                          Relation              which,
                          IndexPartition const& classes) {
    ordered_json j;
    j["relation"] = std::string(to_string(which));
    j["family"]   = S.name();
    auto arr      = ordered_json::array();
    for (auto const& c : classes.classes()) {
      arr.push_back(texts(S, c));
    }
    j["classes"] = std::move(arr);
    return dump(j);
  }

  std::string eggbox_csv(SemigroupTable const&,
                         Relation              which,
                         IndexPartition const& classes) {
    return "relation,class_count,max_class_size\n" + std::string(to_string(which))
           + ',' + std::to_string(classes.class_count()) + ','
           + std::to_string(classes.max_class_size()) + '\n';
  }

  std::string properties_json(std::vector<PropertyReport> const& reports) {
    auto arr = ordered_json::array();
    for (auto const& r : reports) {
      arr.push_back(property(r));
    }
    return dump(arr);
  }

  std::string properties_csv(std::vector<PropertyReport> const& reports) {
    std::string out = "property,family,holds,witness\n";
    for (auto const& r : reports) {
      out += csv_field(r.property) + ',' + csv_field(r.family) + ','
             + (r.holds ? "true" : "false") + ','
             + csv_field(join(r.witness, ' ')) + '\n';
    }
    return out;
  }

  std::string generators_json(GeneratorReport const& r) {
    ordered_json j;
    j["family"] = r.family;
    j["rank"]   = r.rank;
    if (r.formula) {
      j["formula"] = *r.formula;
    }
    if (r.agrees) {
      j["agrees"] = *r.agrees;
    }
    ordered_json g;
    g["idempotents"] = r.idempotents;
    g["essentials"]  = r.essentials;
    g["requisites"]  = r.requisites;
    if (!r.identity.empty()) {
      g["identity"] = r.identity.front();
    }
    g["other"]      = r.other;
    j["generators"] = std::move(g);
    if (r.greedy_fallback) {
      j["greedy_fallback"] = true;
    }
    return dump(j);
  }

  std::string generators_csv(GeneratorReport const& r) {
    std::string out = "family,kind,element\n";
    auto        add = [&](char const* kind, std::vector<std::string> const& v) {
      for (auto const& t : v) {
        out += csv_field(r.family) + ',' + kind + ',' + csv_field(t) + '\n';
      }
    };
    add("identity", r.identity);
    add("idempotent", r.idempotents);
    add("essential", r.essentials);
    add("requisite", r.requisites);
    add("other", r.other);
    return out;
  }

  std::string elements_json(std::vector<std::string> const& texts) {
    return dump(ordered_json(texts));
  }

  std::string verification_json(VerificationReport const& report) {
    ordered_json j;
    auto         rows = ordered_json::array();
    for (auto const& r : report.rows) {
      ordered_json row;
      row["claim"]    = r.id;
      row["location"] = r.location;
      row["family"]   = r.family;
      row["expected"] = r.expected;
      row["computed"] = r.computed;
      row["status"]   = std::string(to_string(r.status));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    ordered_json summary;
    for (auto s : {ClaimStatus::pass, ClaimStatus::fail,
                   ClaimStatus::paper_inconsistent, ClaimStatus::skipped}) {
      summary[std::string(to_string(s))] = report.count(s);
    }
    j["summary"] = std::move(summary);
    j["ok"]      = report.ok();
    return dump(j);
  }

  std::string verification_csv(VerificationReport const& report) {
    std::string out = "claim,location,family,expected,computed,status\n";
    for (auto const& r : report.rows) {
      out += csv_field(r.id) + ',' + csv_field(r.location) + ','
             + csv_field(r.family) + ',' + csv_field(r.expected) + ','
             + csv_field(r.computed) + ',' + std::string(to_string(r.status))
             + '\n';
    }
    return out;
  }

}  // namespace catalan::io
