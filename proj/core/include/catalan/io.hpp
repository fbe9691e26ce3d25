#ifndef CATALAN_IO_HPP_
#define CATALAN_IO_HPP_

#include <string>
#include <vector>

#include "catalan/families.hpp"
#include "catalan/genrank.hpp"
#include "catalan/greens.hpp"
#include "catalan/structure.hpp"
#include "catalan/verify.hpp"

// JSON and CSV renderings. JSON output is pretty-printed with two-space
// indentation; CSV output always starts with a header row.
namespace catalan::io {

  // {family, n, p?, order, elements: [text, ...]}
  std::string table_json(SemigroupTable const& S);
  // Rows i,j,k with k = product(i, j).
  std::string products_csv(SemigroupTable const& S);

  // {relation, family, classes: [[text, ...], ...]}
  std::string eggbox_json(SemigroupTable const& S,
                          Relation              which,
                          IndexPartition const& classes);
  // relation,class_count,max_class_size
  std::string eggbox_csv(SemigroupTable const& S,
                         Relation              which,
                         IndexPartition const& classes);

  // [{property, family, holds, witness?}, ...]
  std::string properties_json(std::vector<PropertyReport> const& reports);
  std::string properties_csv(std::vector<PropertyReport> const& reports);

  // {family, rank, formula?, agrees?, generators: {...}}
  std::string generators_json(GeneratorReport const& report);
  std::string generators_csv(GeneratorReport const& report);

  std::string elements_json(std::vector<std::string> const& texts);

  std::string verification_json(VerificationReport const& report);
  std::string verification_csv(VerificationReport const& report);

  // Quotes a CSV field when it holds a comma or a quote.
  std::string csv_field(std::string const& s);

}  // namespace catalan::io

#endif  // CATALAN_IO_HPP_
