#include "tannaka/model.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tannaka {

namespace {

// A JSON value together with its field path, for error messages.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const json& value() const { return *j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(path_, message); }

  bool has(const char* key) const { return j_->is_object() && j_->contains(key); }
  Node at(const char* key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) throw ParseError(child_path(key), "missing field");
    return Node(*it, child_path(key));
  }
  std::optional<Node> get(const char* key) const {
    if (!has(key)) return std::nullopt;
    return at(key);
  }
  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  Node operator[](std::size_t i) const {
    size();
    return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]");
  }
  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long>();
  }
  std::size_t count() const {
    long v = integer();
    if (v < 0) fail("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

 private:
  std::string child_path(const char* key) const { return path_.empty() ? key : path_ + "." + key; }
  const json* j_;
  std::string path_;
};

Value parse_entry(const Node& n, const Ring& ring) {
  Value v;
  const json& j = n.value();
  if (j.is_number_integer()) {
    v = Value(mpz_class(std::to_string(j.get<long>())));
  } else if (j.is_string()) {
    if (v.set_str(j.get<std::string>(), 10) != 0) n.fail("cannot read scalar");
    if (v.get_den() == 0) n.fail("zero denominator");
    v.canonicalize();
  } else {
    n.fail("expected an integer or a string \"a/b\"");
  }
  if (ring.kind() != Ring::Kind::Rationals && v.get_den() != 1) n.fail("fraction over " + ring.name());
  if (ring.is_finite() && (v < 0 || v >= Value(ring.modulus()))) {
    n.fail("residue outside [0, " + ring.modulus().get_str() + ")");
  }
  return ring.reduce(v);
}

Matrix parse_matrix(const Node& n, const Ring& ring, std::optional<std::size_t> rows, std::size_t cols) {
  const std::size_t r = n.size();
  if (rows && r != *rows) n.fail("expected " + std::to_string(*rows) + " rows, found " + std::to_string(r));
  Matrix m(ring, r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    Node row = n[i];
    if (row.size() != cols) row.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, parse_entry(row[j], ring));
  }
  return m;
}

Matrix parse_row(const Node& n, const Ring& ring, std::size_t cols) {
  if (n.size() != cols) n.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(n.size()));
  Matrix m(ring, 1, cols);
  for (std::size_t j = 0; j < cols; ++j) m.set(0, j, parse_entry(n[j], ring));
  return m;
}

Ring parse_ring(const Node& n) {
  const std::string kind = n.at("kind").str();
  auto modulus = [&]() {
    Node m = n.at("modulus");
    return mpz_class(std::to_string(m.integer()));
  };
  try {
    if (kind == "Integers") return Ring::integers();
    if (kind == "Rationals") return Ring::rationals();
    if (kind == "PrimeField") return Ring::prime_field(modulus());
    if (kind == "IntegersMod") return Ring::integers_mod(modulus());
  } catch (const ValidationError& e) {
    throw ParseError(n.at("modulus").path(), e.what());
  }
  throw UnsupportedError(n.path() + ": unsupported ring kind '" + kind + "'");
}

BAlgebra parse_algebra(const Node& n, const Ring& ring) {
  const std::size_t d = n.at("rank").count();
  Node s = n.at("structure");
  if (s.size() != d) s.fail("expected " + std::to_string(d) + " structure matrices");
  std::vector<Matrix> structure;
  for (std::size_t i = 0; i < d; ++i) structure.push_back(parse_matrix(s[i], ring, d, d));
  Matrix unit = parse_row(n.at("unit"), ring, d);
  try {
    return BAlgebra::from_structure(ring, std::move(structure), std::move(unit));
  } catch (const ValidationError& e) {
    n.fail(e.what());
  }
}

BModule parse_module(const Node& n, const BAlgebra& b) {
  const Ring& ring = b.ring();
  if (n.has("rank")) return BModule::free(b, n.at("rank").count());
  const std::size_t m = n.at("ambient").count();
  Matrix rel = n.has("relations") ? parse_matrix(n.at("relations"), ring, std::nullopt, m) : Matrix(ring, 0, m);
  Node acts = n.at("action");
  if (acts.size() != b.rank()) acts.fail("expected one action matrix per basis element of B");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < b.rank(); ++i) action.push_back(parse_matrix(acts[i], ring, m, m));
  std::optional<Matrix> basis;
  if (n.has("basis")) basis = parse_matrix(n.at("basis"), ring, std::nullopt, m);
  return BModule{b, Presentation(ring, m, rel), std::move(action), std::move(basis)};
}

std::size_t label_index(const Node& n, const std::vector<std::string>& labels) {
  const std::string s = n.str();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == s) return i;
  }
  n.fail("unknown object '" + s + "'");
}

std::vector<std::size_t> label_tuple(const Node& n, const std::vector<std::string>& labels, std::size_t arity) {
  if (n.size() != arity) n.fail("expected " + std::to_string(arity) + " objects");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back(label_index(n[i], labels));
  return out;
}

LinearCategory parse_category(const Node& n, const Ring& ring) {
  Node objs = n.at("objects");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    labels.push_back(objs[i].str());
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) objs[i].fail("repeated object label");
    }
  }
  LinearCategory c(ring, labels);
  const std::size_t k = labels.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) c.set_hom(a, b, Presentation::free(ring, 0));
  }
  std::vector<bool> seen(k * k, false);
  if (auto homs = n.get("homs")) {
    for (std::size_t i = 0; i < homs->size(); ++i) {
      Node h = (*homs)[i];
      const std::size_t a = label_index(h.at("from"), labels), b = label_index(h.at("to"), labels);
      if (seen[a * k + b]) h.fail("Hom(" + labels[a] + ", " + labels[b] + ") given twice");
      seen[a * k + b] = true;
      const std::size_t g = h.at("generators").count();
      Matrix rel = h.has("relations") ? parse_matrix(h.at("relations"), ring, std::nullopt, g) : Matrix(ring, 0, g);
      c.set_hom(a, b, Presentation(ring, g, rel));
    }
  }
  if (auto comps = n.get("compositions")) {
    for (std::size_t i = 0; i < comps->size(); ++i) {
      Node e = (*comps)[i];
      auto t = label_tuple(e.at("objects"), labels, 3);
      const std::size_t rows = c.gens(t[1], t[2]) * c.gens(t[0], t[1]);
      c.set_comp(t[0], t[1], t[2], parse_matrix(e.at("table"), ring, rows, c.gens(t[0], t[2])));
    }
  }
  Node ids = n.at("identities");
  std::vector<bool> have(k, false);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    Node e = ids[i];
    const std::size_t a = label_index(e.at("object"), labels);
    c.set_id(a, parse_row(e.at("element"), ring, c.gens(a, a)));
    have[a] = true;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!have[a]) ids.fail("no identity for '" + labels[a] + "'");
  }
  return c;
}

LinearFunctor parse_functor(const Node& n, const LinearCategory& c, const BAlgebra& b) {
  const auto& labels = c.objects();
  const std::size_t k = labels.size();
  LinearFunctor w(c, b);
  Node objs = n.at("objects");
  std::vector<bool> have(k, false);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    Node e = objs[i];
    const std::size_t a = label_index(e.at("object"), labels);
    w.set_obj(a, parse_module(e.at("module"), b));
    have[a] = true;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!have[a]) objs.fail("no fiber for '" + labels[a] + "'");
  }
  std::vector<bool> mapped(k * k, false);
  if (auto mors = n.get("morphisms")) {
    for (std::size_t i = 0; i < mors->size(); ++i) {
      Node e = (*mors)[i];
      const std::size_t a = label_index(e.at("from"), labels), bb = label_index(e.at("to"), labels);
      Node imgs = e.at("images");
      if (imgs.size() != c.gens(a, bb)) imgs.fail("expected one image per generator of the hom module");
      std::vector<Matrix> images;
      for (std::size_t g = 0; g < imgs.size(); ++g) {
        images.push_back(parse_matrix(imgs[g], b.ring(), w.obj(a).ambient(), w.obj(bb).ambient()));
      }
      w.set_mor(a, bb, std::move(images));
      mapped[a * k + bb] = true;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t bb = 0; bb < k; ++bb) {
      if (!mapped[a * k + bb] && c.gens(a, bb) > 0) {
        n.fail("no images for Hom(" + labels[a] + ", " + labels[bb] + ")");
      }
    }
  }
  return w;
}

// Records keyed by object tuples; every tuple must appear exactly once unless
// `fill` supplies a default.
template <class F, class D>
std::vector<Matrix> keyed(const Node& list, const std::vector<std::string>& labels, std::size_t arity,
                          const char* field, F shape_of, D fill) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= labels.size();
  std::vector<std::optional<Matrix>> slots(total);
  for (std::size_t i = 0; i < list.size(); ++i) {
    Node e = list[i];
    std::vector<std::size_t> t = arity == 1 ? std::vector<std::size_t>{label_index(e.at("object"), labels)}
                                            : label_tuple(e.at("objects"), labels, arity);
    std::size_t idx = 0;
    for (auto x : t) idx = idx * labels.size() + x;
    if (slots[idx]) e.fail("entry repeated");
    slots[idx] = shape_of(t, e.at(field));
  }
  std::vector<Matrix> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (slots[idx]) {
      out.push_back(*slots[idx]);
      continue;
    }
    std::vector<std::size_t> t(arity);
    std::size_t rest = idx;
    for (std::size_t i = arity; i-- > 0;) {
      t[i] = rest % labels.size();
      rest /= labels.size();
    }
    std::optional<Matrix> d = fill(t);
    if (!d) {
      std::string names;
      for (auto x : t) names += (names.empty() ? "" : ", ") + labels[x];
      list.fail("missing entry for (" + names + ")");
    }
    out.push_back(*d);
  }
  return out;
}

const json& empty_list() {
  static const json list = json::array();
  return list;
}

struct MonoidalSections {
  MonoidalData mon;
  FunctorMonoidalData fmon;
};

MonoidalSections parse_monoidal(const Node& n, const LinearFunctor& w) {
  const LinearCategory& c = w.domain();
  const Ring& ring = c.ring();
  const auto& labels = c.objects();
  const std::size_t k = labels.size();
  MonoidalData mon;
  mon.unit = label_index(n.at("unit"), labels);
  mon.tensor.assign(k * k, 0);
  {
    Node list = n.at("tensor");
    std::vector<bool> have(k * k, false);
    for (std::size_t i = 0; i < list.size(); ++i) {
      Node e = list[i];
      auto t = label_tuple(e.at("objects"), labels, 2);
      have[t[0] * k + t[1]] = true;
      mon.tensor[t[0] * k + t[1]] = label_index(e.at("object"), labels);
    }
    for (std::size_t i = 0; i < k * k; ++i) {
      if (!have[i]) list.fail("missing tensor product " + labels[i / k] + " ⊗ " + labels[i % k]);
    }
  }
  auto none = [](const std::vector<std::size_t>&) { return std::optional<Matrix>{}; };
  auto tens = [&](std::size_t a, std::size_t b) { return mon.tensor[a * k + b]; };
  auto table_rows = [&](const std::vector<std::size_t>& t) { return c.gens(t[0], t[2]) * c.gens(t[1], t[3]); };
  auto table_cols = [&](const std::vector<std::size_t>& t) { return c.gens(tens(t[0], t[1]), tens(t[2], t[3])); };
  mon.hom_tensor = keyed(
      n.get("hom_tensor") ? n.at("hom_tensor") : Node(empty_list(), n.path() + ".hom_tensor"), labels, 4, "table",
      [&](const std::vector<std::size_t>& t, const Node& v) { return parse_matrix(v, ring, table_rows(t), table_cols(t)); },
      [&](const std::vector<std::size_t>& t) { return std::optional<Matrix>(Matrix(ring, table_rows(t), table_cols(t))); });
  mon.assoc = keyed(
      n.at("associator"), labels, 3, "element",
      [&](const std::vector<std::size_t>& t, const Node& v) {
        return parse_row(v, ring, c.gens(tens(tens(t[0], t[1]), t[2]), tens(t[0], tens(t[1], t[2]))));
      },
      none);
  mon.left_unitor = keyed(
      n.at("left_unitor"), labels, 1, "element",
      [&](const std::vector<std::size_t>& t, const Node& v) { return parse_row(v, ring, c.gens(tens(mon.unit, t[0]), t[0])); },
      none);
  mon.right_unitor = keyed(
      n.at("right_unitor"), labels, 1, "element",
      [&](const std::vector<std::size_t>& t, const Node& v) { return parse_row(v, ring, c.gens(tens(t[0], mon.unit), t[0])); },
      none);
  std::vector<Matrix> psi = keyed(
      n.at("psi"), labels, 2, "matrix",
      [&](const std::vector<std::size_t>& t, const Node& v) {
        return parse_matrix(v, ring, w.obj(t[0]).ambient() * w.obj(t[1]).ambient(), w.obj(tens(t[0], t[1])).ambient());
      },
      none);
  Matrix psi0 = parse_matrix(n.at("psi0"), ring, w.algebra().rank(), w.obj(mon.unit).ambient());
  return {std::move(mon), FunctorMonoidalData{std::move(psi), std::move(psi0)}};
}

SymmetryData parse_symmetry(const Node& n, const LinearCategory& c, const MonoidalData& mon) {
  const auto& labels = c.objects();
  auto none = [](const std::vector<std::size_t>&) { return std::optional<Matrix>{}; };
  return SymmetryData{keyed(
      n.at("sigma"), labels, 2, "element",
      [&](const std::vector<std::size_t>& t, const Node& v) {
        return parse_row(v, c.ring(), c.gens(mon.obj(t[0], t[1]), mon.obj(t[1], t[0])));
      },
      none)};
}

DualityData parse_duality(const Node& n, const LinearCategory& c, const MonoidalData& mon) {
  const auto& labels = c.objects();
  const std::size_t k = labels.size();
  Node list = n.at("duals");
  DualityData d;
  d.dual.assign(k, 0);
  std::vector<std::optional<Matrix>> ev(k), coev(k);
  for (std::size_t i = 0; i < list.size(); ++i) {
    Node e = list[i];
    const std::size_t a = label_index(e.at("object"), labels);
    if (ev[a]) e.fail("entry repeated");
    const std::size_t da = label_index(e.at("dual"), labels);
    d.dual[a] = da;
    ev[a] = parse_row(e.at("ev"), c.ring(), c.gens(mon.obj(da, a), mon.unit));
    coev[a] = parse_row(e.at("coev"), c.ring(), c.gens(mon.unit, mon.obj(a, da)));
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!ev[a]) list.fail("no dual for '" + labels[a] + "'");
    d.ev.push_back(*ev[a]);
    d.coev.push_back(*coev[a]);
  }
  return d;
}

Coalgebroid parse_coalgebroid(const Node& n, const BAlgebra& b, std::optional<BialgebroidSection>& bi) {
  const Ring& ring = b.ring();
  const std::size_t m = n.at("ambient").count(), d = b.rank();
  Matrix rel = n.has("relations") ? parse_matrix(n.at("relations"), ring, std::nullopt, m) : Matrix(ring, 0, m);
  auto actions = [&](const char* key) {
    Node a = n.at(key);
    if (a.size() != d) a.fail("expected one action matrix per basis element of B");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < d; ++i) out.push_back(parse_matrix(a[i], ring, m, m));
    return out;
  };
  Coalgebroid c{b,
                Presentation(ring, m, rel),
                actions("s_action"),
                actions("t_action"),
                parse_matrix(n.at("delta"), ring, m, m * m),
                parse_matrix(n.at("eps"), ring, m, d)};
  if (n.has("mu")) {
    BialgebroidSection s{parse_matrix(n.at("mu"), ring, m * m, m), parse_row(n.at("unit"), ring, m),
                         parse_matrix(n.at("s_map"), ring, d, m), parse_matrix(n.at("t_map"), ring, d, m),
                         std::nullopt, false};
    if (n.has("antipode")) s.antipode = parse_matrix(n.at("antipode"), ring, m, m);
    if (n.has("commutative")) s.commutative = n.at("commutative").boolean();
    bi = std::move(s);
  } else if (n.has("antipode")) {
    n.at("antipode").fail("an antipode needs the algebra structure (mu)");
  }
  return c;
}

FLObject parse_fl_object(const Node& n, unsigned long p, unsigned nn) {
  if (n.has("twist")) {
    FLObject x = fl_twist(p, nn, n.at("twist").integer());
    if (n.has("label")) x.label = n.at("label").str();
    return x;
  }
  const Ring ring = fl_ring(p, nn);
  FLObject x;
  x.label = n.at("label").str();
  x.p = p;
  x.n = nn;
  x.rank = n.at("rank").count();
  x.lo = n.at("lo").integer();
  x.hi = n.at("hi").integer();
  if (x.hi < x.lo) n.at("hi").fail("window is empty");
  const auto levels = static_cast<std::size_t>(x.hi - x.lo + 1);
  Node fil = n.at("fil"), ret = n.at("ret"), phi = n.at("phi");
  for (Node* list : {&fil, &ret, &phi}) {
    if (list->size() != levels) list->fail("expected one matrix per level of the window");
  }
  for (std::size_t l = 0; l < levels; ++l) {
    x.fil.push_back(parse_matrix(fil[l], ring, std::nullopt, x.rank));
    const std::size_t k = x.fil.back().rows();
    x.ret.push_back(parse_matrix(ret[l], ring, x.rank, k));
    x.phi.push_back(parse_matrix(phi[l], ring, k, x.rank));
  }
  return x;
}

FLSection parse_fl(const Node& n, const ParseOptions& opt) {
  FLSection s;
  if (opt.p) {
    s.p = *opt.p;
  } else {
    const long p = n.at("p").integer();
    if (p < 2) n.at("p").fail("expected a prime");
    s.p = static_cast<unsigned long>(p);
  }
  if (opt.n) {
    s.n = *opt.n;
  } else {
    const long v = n.at("n").integer();
    if (v < 1) n.at("n").fail("expected n >= 1");
    s.n = static_cast<unsigned>(v);
  }
  try {
    fl_ring(s.p, s.n);
  } catch (const ValidationError& e) {
    throw ParseError(n.path() + ".p", e.what());
  }
  Node objs = n.at("objects");
  for (std::size_t i = 0; i < objs.size(); ++i) s.objects.push_back(parse_fl_object(objs[i], s.p, s.n));
  return s;
}

// ValidationErrors raised while assembling a section become parse errors at that section.
template <class F>
auto within(const Node& n, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ParseError(n.path(), e.what());
  }
}

}  // namespace

std::optional<MonoidalModel> ModelDocument::monoidal_model() const {
  if (!functor || !monoidal || !functor_monoidal) return std::nullopt;
  return MonoidalModel{*functor, *monoidal, *functor_monoidal, symmetry, duality};
}

std::optional<Bialgebroid> ModelDocument::bialgebroid_value() const {
  if (!coalgebroid || !bialgebroid) return std::nullopt;
  return Bialgebroid{*coalgebroid, bialgebroid->mu, bialgebroid->unit, bialgebroid->s_map, bialgebroid->t_map,
                     bialgebroid->antipode};
}

ModelDocument parse_model(const json& doc, const ParseOptions& options) {
  Node root(doc, "");
  if (!doc.is_object()) root.fail("expected a JSON object");
  static const std::vector<std::string> known{"ring",     "algebraB", "category",  "functor",     "monoidal",
                                              "symmetry", "duality",  "coalgebroid", "comodules", "cokernels",
                                              "fl",       "basechange"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError(key, "unknown section");
  }
  std::optional<FLSection> fl;
  if (auto n = root.get("fl")) fl = parse_fl(*n, options);
  Ring ring = Ring::integers();
  if (auto n = root.get("ring")) {
    ring = parse_ring(*n);
  } else if (fl) {
    ring = fl_ring(fl->p, fl->n);
  } else {
    root.at("ring");
  }
  ModelDocument m(ring);
  m.fl = std::move(fl);
  if (m.fl && !(m.fl->objects.empty() || m.fl->objects.front().ring() == ring)) {
    throw ParseError("fl", "W_n differs from the document ring " + ring.name());
  }
  if (auto n = root.get("algebraB")) m.algebra = parse_algebra(*n, ring);
  if (auto n = root.get("category")) m.category = within(*n, [&] { return parse_category(*n, ring); });
  if (auto n = root.get("functor")) {
    if (!m.category) n->fail("a functor needs a category section");
    m.functor = within(*n, [&] { return parse_functor(*n, *m.category, m.algebra); });
  }
  if (auto n = root.get("monoidal")) {
    if (!m.functor) n->fail("monoidal data need category and functor sections");
    auto s = within(*n, [&] { return parse_monoidal(*n, *m.functor); });
    m.monoidal = std::move(s.mon);
    m.functor_monoidal = std::move(s.fmon);
  }
  if (auto n = root.get("symmetry")) {
    if (!m.monoidal) n->fail("a symmetry needs a monoidal section");
    m.symmetry = within(*n, [&] { return parse_symmetry(*n, *m.category, *m.monoidal); });
  }
  if (auto n = root.get("duality")) {
    if (!m.monoidal) n->fail("duals need a monoidal section");
    m.duality = within(*n, [&] { return parse_duality(*n, *m.category, *m.monoidal); });
  }
  if (auto n = root.get("coalgebroid")) {
    m.coalgebroid = within(*n, [&] { return parse_coalgebroid(*n, m.algebra, m.bialgebroid); });
  }
  if (auto n = root.get("comodules")) {
    if (!m.coalgebroid) n->fail("comodules need a coalgebroid section");
    for (std::size_t i = 0; i < n->size(); ++i) {
      Node e = (*n)[i];
      BModule mod = within(e, [&] { return parse_module(e.at("module"), m.algebra); });
      const std::size_t amb = mod.ambient(), cm = m.coalgebroid->ambient();
      Matrix rho = parse_matrix(e.at("rho"), ring, amb, cm * amb);
      Matrix phi = parse_matrix(e.at("phi"), ring, amb, cm);
      m.comodules.push_back({e.at("label").str(), std::move(mod), std::move(rho), std::move(phi)});
    }
  }
  if (auto n = root.get("cokernels")) {
    if (!m.category) n->fail("cokernel declarations need a category section");
    const auto& labels = m.category->objects();
    std::vector<CokernelDeclaration> decls;
    for (std::size_t i = 0; i < n->size(); ++i) {
      Node e = (*n)[i];
      const std::size_t a = label_index(e.at("from"), labels), b = label_index(e.at("to"), labels),
                        t = label_index(e.at("target"), labels);
      decls.push_back({a, b, t, parse_row(e.at("f"), ring, m.category->gens(a, b)),
                       parse_row(e.at("q"), ring, m.category->gens(b, t))});
    }
    m.cokernels = std::move(decls);
  }
  if (auto n = root.get("basechange")) m.basechange_target = parse_ring(n->at("target"));
  return m;
}

ModelDocument parse_model_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, e.what());
  }
  return parse_model(doc, options);
}

// Serialization.

json serialize_ring(const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::Integers:
      return json{{"kind", "Integers"}};
    case Ring::Kind::Rationals:
      return json{{"kind", "Rationals"}};
    case Ring::Kind::PrimeField:
      return json{{"kind", "PrimeField"}, {"modulus", r.modulus().get_si()}};
    case Ring::Kind::IntegersMod:
      return json{{"kind", "IntegersMod"}, {"modulus", r.modulus().get_si()}};
  }
  return json();
}

json serialize_matrix(const Matrix& m) { return matrix_to_json(m); }

namespace {

json serialize_row(const Matrix& m) { return matrix_to_json(m).at(0); }

json serialize_module(const BModule& m) {
  if (m.pres.relations().rows() == 0 && m.basis) {
    BModule f = BModule::free(m.algebra, m.basis->rows());
    if (f.pres == m.pres && f.action == m.action && f.basis == m.basis) return json{{"rank", m.basis->rows()}};
  }
  json out{{"ambient", m.ambient()}, {"action", json::array()}};
  if (m.pres.relations().rows() > 0) out["relations"] = serialize_matrix(m.pres.relations());
  for (const auto& a : m.action) out["action"].push_back(serialize_matrix(a));
  if (m.basis) out["basis"] = serialize_matrix(*m.basis);
  return out;
}

json serialize_algebra(const BAlgebra& b) {
  json s = json::array();
  for (const auto& m : b.mult_matrices()) s.push_back(serialize_matrix(m));
  return json{{"rank", b.rank()}, {"structure", s}, {"unit", serialize_row(b.unit())}};
}

json serialize_category(const LinearCategory& c) {
  const auto& l = c.objects();
  const std::size_t k = c.size();
  json homs = json::array(), comps = json::array(), ids = json::array();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Presentation& h = c.hom(a, b);
      if (h.rank() == 0) continue;
      json e{{"from", l[a]}, {"to", l[b]}, {"generators", h.rank()}};
      if (h.relations().rows() > 0) e["relations"] = serialize_matrix(h.relations());
      homs.push_back(e);
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t d = 0; d < k; ++d) {
        const Matrix& t = c.comp(a, b, d);
        if (t.is_zero()) continue;
        comps.push_back(json{{"objects", {l[a], l[b], l[d]}}, {"table", serialize_matrix(t)}});
      }
    }
    ids.push_back(json{{"object", l[a]}, {"element", serialize_row(c.id(a))}});
  }
  return json{{"objects", l}, {"homs", homs}, {"compositions", comps}, {"identities", ids}};
}

json serialize_functor(const LinearFunctor& w) {
  const LinearCategory& c = w.domain();
  const auto& l = c.objects();
  json objs = json::array(), mors = json::array();
  for (std::size_t a = 0; a < c.size(); ++a) objs.push_back(json{{"object", l[a]}, {"module", serialize_module(w.obj(a))}});
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (c.gens(a, b) == 0) continue;
      json imgs = json::array();
      for (const auto& m : w.mor(a, b)) imgs.push_back(serialize_matrix(m));
      mors.push_back(json{{"from", l[a]}, {"to", l[b]}, {"images", imgs}});
    }
  }
  return json{{"objects", objs}, {"morphisms", mors}};
}

json serialize_monoidal(const LinearCategory& c, const MonoidalData& mon, const FunctorMonoidalData& fmon) {
  const auto& l = c.objects();
  const std::size_t k = c.size();
  json tensor = json::array(), ht = json::array(), assoc = json::array(), lu = json::array(), ru = json::array(),
       psi = json::array();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      tensor.push_back(json{{"objects", {l[a], l[b]}}, {"object", l[mon.obj(a, b)]}});
      psi.push_back(json{{"objects", {l[a], l[b]}}, {"matrix", serialize_matrix(fmon.psi[a * k + b])}});
      for (std::size_t d = 0; d < k; ++d) {
        assoc.push_back(json{{"objects", {l[a], l[b], l[d]}}, {"element", serialize_row(mon.associator(a, b, d))}});
        for (std::size_t e = 0; e < k; ++e) {
          const Matrix& t = mon.hom(a, b, d, e);
          if (t.is_zero()) continue;
          ht.push_back(json{{"objects", {l[a], l[b], l[d], l[e]}}, {"table", serialize_matrix(t)}});
        }
      }
    }
    lu.push_back(json{{"object", l[a]}, {"element", serialize_row(mon.left_unitor[a])}});
    ru.push_back(json{{"object", l[a]}, {"element", serialize_row(mon.right_unitor[a])}});
  }
  return json{{"unit", l[mon.unit]},   {"tensor", tensor},    {"hom_tensor", ht},         {"associator", assoc},
              {"left_unitor", lu},     {"right_unitor", ru}, {"psi", psi},               {"psi0", serialize_matrix(fmon.psi0)}};
}

json serialize_coalgebroid(const Coalgebroid& c, const std::optional<BialgebroidSection>& bi) {
  json s = json::array(), t = json::array();
  for (const auto& m : c.s_action) s.push_back(serialize_matrix(m));
  for (const auto& m : c.t_action) t.push_back(serialize_matrix(m));
  json out{{"ambient", c.ambient()}, {"s_action", s}, {"t_action", t}, {"delta", serialize_matrix(c.delta)},
           {"eps", serialize_matrix(c.eps)}};
  if (c.carrier.relations().rows() > 0) out["relations"] = serialize_matrix(c.carrier.relations());
  if (bi) {
    out["mu"] = serialize_matrix(bi->mu);
    out["unit"] = serialize_row(bi->unit);
    out["s_map"] = serialize_matrix(bi->s_map);
    out["t_map"] = serialize_matrix(bi->t_map);
    out["commutative"] = bi->commutative;
    if (bi->antipode) out["antipode"] = serialize_matrix(*bi->antipode);
  }
  return out;
}

json serialize_fl_object(const FLObject& x) {
  json fil = json::array(), ret = json::array(), phi = json::array();
  for (std::size_t l = 0; l < x.fil.size(); ++l) {
    fil.push_back(serialize_matrix(x.fil[l]));
    ret.push_back(serialize_matrix(x.ret[l]));
    phi.push_back(serialize_matrix(x.phi[l]));
  }
  return json{{"label", x.label}, {"rank", x.rank}, {"lo", x.lo}, {"hi", x.hi}, {"fil", fil}, {"ret", ret}, {"phi", phi}};
}

}  // namespace

json serialize_model(const ModelDocument& m) {
  json out{{"ring", serialize_ring(m.ring)}};
  if (!m.algebra.is_trivial()) out["algebraB"] = serialize_algebra(m.algebra);
  const LinearCategory* cat = m.functor ? &m.functor->domain() : (m.category ? &*m.category : nullptr);
  if (cat) out["category"] = serialize_category(*cat);
  if (m.functor) out["functor"] = serialize_functor(*m.functor);
  if (m.monoidal && m.functor_monoidal) out["monoidal"] = serialize_monoidal(*cat, *m.monoidal, *m.functor_monoidal);
  const auto& l = cat ? cat->objects() : std::vector<std::string>{};
  if (m.symmetry) {
    json sig = json::array();
    const std::size_t k = l.size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        sig.push_back(json{{"objects", {l[a], l[b]}}, {"element", serialize_row(m.symmetry->sigma[a * k + b])}});
      }
    }
    out["symmetry"] = json{{"sigma", sig}};
  }
  if (m.duality) {
    json d = json::array();
    for (std::size_t a = 0; a < l.size(); ++a) {
      d.push_back(json{{"object", l[a]},
                       {"dual", l[m.duality->dual[a]]},
                       {"ev", serialize_row(m.duality->ev[a])},
                       {"coev", serialize_row(m.duality->coev[a])}});
    }
    out["duality"] = json{{"duals", d}};
  }
  if (m.coalgebroid) out["coalgebroid"] = serialize_coalgebroid(*m.coalgebroid, m.bialgebroid);
  if (!m.comodules.empty()) {
    json list = json::array();
    for (const auto& e : m.comodules) {
      list.push_back(json{{"label", e.label},
                          {"module", serialize_module(e.module)},
                          {"rho", serialize_matrix(e.rho)},
                          {"phi", serialize_matrix(e.phi)}});
    }
    out["comodules"] = list;
  }
  if (m.cokernels) {
    json list = json::array();
    for (const auto& d : *m.cokernels) {
      list.push_back(json{{"from", l[d.from]},
                          {"to", l[d.to]},
                          {"target", l[d.target]},
                          {"f", serialize_row(d.f)},
                          {"q", serialize_row(d.q)}});
    }
    out["cokernels"] = list;
  }
  if (m.fl) {
    json objs = json::array();
    for (const auto& x : m.fl->objects) objs.push_back(serialize_fl_object(x));
    out["fl"] = json{{"p", m.fl->p}, {"n", m.fl->n}, {"objects", objs}};
  }
  if (m.basechange_target) out["basechange"] = json{{"target", serialize_ring(*m.basechange_target)}};
  return out;
}

ModelDocument document_for(const LinearFunctor& w) {
  ModelDocument d(w.ring());
  d.algebra = w.algebra();
  d.category = w.domain();
  d.functor = w;
  return d;
}

ModelDocument document_for(const MonoidalModel& m) {
  ModelDocument d = document_for(m.functor);
  d.monoidal = m.mon;
  d.functor_monoidal = m.fmon;
  d.symmetry = m.sym;
  d.duality = m.dual;
  return d;
}

ModelDocument document_for(const Coalgebroid& c) {
  ModelDocument d(c.ring());
  d.algebra = c.algebra;
  d.coalgebroid = c;
  return d;
}

}  // namespace tannaka
