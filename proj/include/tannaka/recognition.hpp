#pragma once

#include <string>
#include <vector>

#include "tannaka/category.hpp"

namespace tannaka {

enum class Verdict { pass, fail, unverified };
const char* to_string(Verdict v);

struct RecognitionReport {
  std::string condition;  // "i", "ii" or "iii"
  Verdict verdict = Verdict::pass;
  json witnesses = json::array();  // counterexamples (fail) or open items (unverified)
  std::vector<std::string> notes;
  bool exhaustive = false;         // the enumeration covered all finite data
  json entries = json::array();    // per-morphism results for condition iii
};
json to_json(const RecognitionReport& r);

// Default cap on the number of ambient vectors enumerated per module.
inline constexpr std::size_t default_search_bound = 4096;

// Faithfulness (kernel computation on every Hom) and, over finite rings,
// reflection of isomorphisms by enumerating hom elements.
RecognitionReport check_condition_i(const LinearFunctor& w, std::size_t bound = default_search_bound);

// Cofilteredness of the category of elements: nonempty, cones over every pair
// of elements, and equalizing maps for every parallel pair.  Exhaustive over
// finite rings within the bound, unverified otherwise.
RecognitionReport check_condition_ii(const LinearFunctor& w, std::size_t bound = default_search_bound);

// (f, q): f ∈ Hom(from, to), q ∈ Hom(to, target) declared as a cokernel of f.
struct CokernelDeclaration {
  std::size_t from = 0, to = 0, target = 0;
  Matrix f;
  Matrix q;
};

// For each hom generator (and, over finite rings, each hom element within the
// bound) whose fiber cokernel is free, the matching declaration must satisfy
// q∘f = 0, couniversality against every Hom(to, X), and w(q) inducing
// coker w(f) ≅ w(target).  Missing declarations are unverified.
RecognitionReport check_condition_iii(const LinearFunctor& w, const std::vector<CokernelDeclaration>& declared,
                                      std::size_t bound = default_search_bound);

}  // namespace tannaka
