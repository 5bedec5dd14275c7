#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tannaka/flmod.hpp"
#include "tannaka/monoidal.hpp"
#include "tannaka/recognition.hpp"

namespace tannaka {

// Malformed model document; `path` names the offending field, e.g.
// "category.homs[1].relations".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Algebra structure on a coalgebroid section: multiplication on L ⊗_R L,
// unit, source and target maps, and optionally an antipode.
struct BialgebroidSection {
  Matrix mu;
  Matrix unit;
  Matrix s_map;
  Matrix t_map;
  std::optional<Matrix> antipode;
  bool commutative = false;
};

// A comodule together with its map φ: M -> C, for counit comparisons.
struct ComoduleEntry {
  std::string label;
  BModule module;
  Matrix rho;
  Matrix phi;
};

struct FLSection {
  unsigned long p = 2;
  unsigned n = 1;
  std::vector<FLObject> objects;
};

struct ModelDocument {
  Ring ring;
  BAlgebra algebra;
  std::optional<LinearCategory> category;
  std::optional<LinearFunctor> functor;
  std::optional<MonoidalData> monoidal;
  std::optional<FunctorMonoidalData> functor_monoidal;
  std::optional<SymmetryData> symmetry;
  std::optional<DualityData> duality;
  std::optional<Coalgebroid> coalgebroid;
  std::optional<BialgebroidSection> bialgebroid;
  std::vector<ComoduleEntry> comodules;
  std::optional<std::vector<CokernelDeclaration>> cokernels;
  std::optional<FLSection> fl;
  std::optional<Ring> basechange_target;

  explicit ModelDocument(const Ring& r) : ring(r), algebra(BAlgebra::trivial(r)) {}
  std::optional<MonoidalModel> monoidal_model() const;
  std::optional<Bialgebroid> bialgebroid_value() const;
};

// p and n override the values in the "fl" section (and supply them when the
// section omits them).
struct ParseOptions {
  std::optional<unsigned long> p;
  std::optional<unsigned> n;
};

// Throws ParseError for malformed documents and UnsupportedError for ring
// kinds that are not implemented.
ModelDocument parse_model(const json& doc, const ParseOptions& options = {});
ModelDocument parse_model_file(const std::string& path, const ParseOptions& options = {});

json serialize_ring(const Ring& r);
json serialize_matrix(const Matrix& m);
json serialize_model(const ModelDocument& doc);

// Convenience constructors for documents built in code.
ModelDocument document_for(const LinearFunctor& w);
ModelDocument document_for(const MonoidalModel& m);
ModelDocument document_for(const Coalgebroid& c);

}  // namespace tannaka
