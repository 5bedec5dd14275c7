#include "models.hpp"

#include "fixtures.hpp"

namespace tannaka::fixtures {

namespace {

json with_comodules(const Coalgebroid& c, const std::vector<std::size_t>& lines) {
  ModelDocument d = document_for(c);
  for (auto g : lines) {
    auto [m, phi] = grouplike_line(c, g);
    d.comodules.push_back({"x" + std::to_string(g), m.carrier, m.rho, phi});
  }
  return serialize_model(d);
}

// {0, A} over F_2 with a declared cokernel for every generator and element.
json zero_line() {
  const Ring f2 = Ring::prime_field(2);
  ModelDocument d = document_for(graded(f2, {"0", "A"}, {{}, {0}}));
  const Matrix none(f2, 1, 0), one = Matrix::row_vector(f2, {1}), zero = Matrix::row_vector(f2, {0});
  d.cokernels = std::vector<CokernelDeclaration>{
      {0, 0, 0, none, none}, {0, 1, 1, none, one}, {1, 0, 0, none, none}, {1, 1, 0, one, none}, {1, 1, 1, zero, one}};
  return serialize_model(d);
}

}  // namespace

std::vector<std::pair<std::string, json>> model_files() {
  const Ring f2 = Ring::prime_field(2), f3 = Ring::prime_field(3), f5 = Ring::prime_field(5);
  const Ring z4 = Ring::integers_mod(4);
  std::vector<std::pair<std::string, json>> out;
  out.emplace_back("comatrix_f5.json", serialize_model(document_for(one_object(f5, 2))));
  {
    ModelDocument d = document_for(one_object(z4, 2));
    d.basechange_target = Ring::integers_mod(2);
    out.emplace_back("comatrix_z4.json", serialize_model(d));
  }
  out.emplace_back("c2_lines_f3.json", serialize_model(document_for(cyclic_lines(f3, 2))));
  out.emplace_back("c3_lines_f2.json", serialize_model(document_for(cyclic_lines(f2, 3))));
  out.emplace_back("idempotent_f3.json", serialize_model(document_for(idempotent_monoidal(f3))));
  out.emplace_back("pair_groupoid_f3.json", serialize_model(document_for(pair_groupoid_monoidal(f3))));
  {
    MonoidalModel m = cyclic_lines(f5, 2);
    m.mon.assoc[(1 * 2 + 1) * 2 + 1] = Matrix::from_ints(f5, {{2}});
    out.emplace_back("broken_pentagon_f5.json", serialize_model(document_for(m)));
  }
  out.emplace_back("c2_biproduct_f2.json", serialize_model(document_for(c2_lines(f2, true))));
  out.emplace_back("c2_lines_f2.json", serialize_model(document_for(c2_lines(f2))));
  out.emplace_back("nilpotent_f2.json", serialize_model(document_for(nilpotent(f2))));
  out.emplace_back("zero_line_f2.json", zero_line());
  out.emplace_back("grouplike_two_lines.json", with_comodules(grouplike(f3, 2), {0, 1}));
  out.emplace_back("grouplike_one_line.json", with_comodules(grouplike(f3, 2), {0}));
  out.emplace_back("fl_twists.json", json{{"fl", {{"objects", {{{"twist", 0}}, {{"twist", 1}}}}}}});
  out.emplace_back("fl_twists_p3n2.json",
                   json{{"fl", {{"p", 3}, {"n", 2}, {"objects", {{{"twist", 0}}, {{"twist", 1}}, {{"twist", 2}}}}}}});
  {
    json bad = serialize_model(document_for(one_object(f5, 2)));
    bad["functor"]["morphisms"][0]["images"][0] = json::array({{1, 0, 0}, {0, 1, 0}});
    out.emplace_back("bad_shape.json", bad);
  }
  out.emplace_back("bad_modulus.json", json{{"ring", {{"kind", "IntegersMod"}, {"modulus", 1}}}});
  out.emplace_back("unsupported_ring.json", json{{"ring", {{"kind", "GaussianIntegers"}}}});
  return out;
}

}  // namespace tannaka::fixtures
