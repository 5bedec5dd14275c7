#include "tannaka/recognition.hpp"

#include <map>

namespace tannaka {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unverified: return "unverified";
  }
  return "unverified";
}

json to_json(const RecognitionReport& r) {
  return json{{"condition", r.condition}, {"verdict", to_string(r.verdict)}, {"witnesses", r.witnesses},
              {"notes", r.notes},         {"exhaustive", r.exhaustive},      {"entries", r.entries}};
}

namespace {

json row_json(const Matrix& m) { return matrix_to_json(m).at(0); }

// Canonical image of x under w(f).
Matrix apply(const LinearFunctor& w, std::size_t a, std::size_t b, const Matrix& f, const Matrix& x) {
  return reduce_modulo(w.obj(b).pres.relations(), x * w.map(a, b, f));
}

void downgrade(RecognitionReport& r, Verdict v) {
  if (v == Verdict::fail || (v == Verdict::unverified && r.verdict == Verdict::pass)) r.verdict = v;
}

}  // namespace

RecognitionReport check_condition_i(const LinearFunctor& w, std::size_t bound) {
  RecognitionReport rep{"i"};
  const LinearCategory& c = w.domain();
  const Ring& ring = w.ring();
  const std::size_t n = c.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t g = c.gens(a, b);
      if (g == 0) continue;
      const std::size_t amb_a = w.obj(a).ambient(), amb_b = w.obj(b).ambient();
      Matrix v(ring, g, amb_a * amb_b);
      for (std::size_t k = 0; k < g; ++k) v.set_row(k, flatten(w.mor(a, b)[k]));
      Matrix big = vstack(v, kron(Matrix::identity(ring, amb_a), w.obj(b).pres.relations()));
      Matrix ker = kernel(big);
      for (std::size_t r = 0; r < ker.rows(); ++r) {
        Matrix f = ker.block(r, 0, 1, g);
        if (!c.hom(a, b).contains(f)) {
          rep.witnesses.push_back({{"kind", "faithful"}, {"from", c.objects()[a]}, {"to", c.objects()[b]}, {"element", row_json(f)}});
          downgrade(rep, Verdict::fail);
          break;
        }
      }
    }
  }
  if (!ring.is_finite()) {
    rep.notes.push_back("reflection of isomorphisms needs a finite ring");
    downgrade(rep, Verdict::unverified);
    return rep;
  }
  bool complete = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto elems = enumerate_elements(c.hom(a, b), bound);
      if (!elems) {
        complete = false;
        rep.notes.push_back("Hom(" + c.objects()[a] + ", " + c.objects()[b] + ") exceeds the search bound");
        continue;
      }
      for (const auto& f : *elems) {
        Matrix wf = w.map(a, b, f);
        if (is_isomorphism(wf, w.obj(a).pres, w.obj(b).pres) && !hom_inverse(c, a, b, f)) {
          rep.witnesses.push_back({{"kind", "reflects_isos"}, {"from", c.objects()[a]}, {"to", c.objects()[b]}, {"element", row_json(f)}});
          downgrade(rep, Verdict::fail);
          break;
        }
      }
    }
  }
  rep.exhaustive = complete;
  if (!complete) downgrade(rep, Verdict::unverified);
  return rep;
}

RecognitionReport check_condition_ii(const LinearFunctor& w, std::size_t bound) {
  RecognitionReport rep{"ii"};
  const LinearCategory& c = w.domain();
  const std::size_t n = c.size();
  if (n == 0) {
    rep.verdict = Verdict::fail;
    rep.witnesses.push_back({{"kind", "nonempty"}});
    rep.exhaustive = true;
    return rep;
  }
  if (!w.ring().is_finite()) {
    rep.verdict = Verdict::unverified;
    rep.notes.push_back("cofilteredness is only decided over finite rings");
    return rep;
  }
  struct Elem {
    std::size_t obj;
    Matrix x;
  };
  std::vector<Elem> elems;
  std::map<std::pair<std::size_t, std::vector<std::string>>, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a) {
    auto xs = enumerate_elements(w.obj(a).pres, bound);
    if (!xs) {
      rep.verdict = Verdict::unverified;
      rep.notes.push_back("w(" + c.objects()[a] + ") exceeds the search bound");
      return rep;
    }
    for (auto& x : *xs) {
      index[{a, x.to_strings().at(0)}] = elems.size();
      elems.push_back({a, std::move(x)});
    }
  }
  std::vector<std::vector<Matrix>> homs(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto hs = enumerate_elements(c.hom(a, b), bound);
      if (!hs) {
        rep.verdict = Verdict::unverified;
        rep.notes.push_back("Hom(" + c.objects()[a] + ", " + c.objects()[b] + ") exceeds the search bound");
        return rep;
      }
      homs[a * n + b] = std::move(*hs);
    }
  }
  auto elem_json = [&](std::size_t e) { return json{{"object", c.objects()[elems[e].obj]}, {"element", row_json(elems[e].x)}}; };
  auto lookup = [&](std::size_t obj, const Matrix& x) { return index.at({obj, x.to_strings().at(0)}); };

  // reach[e]: elements reachable from e by some morphism of the category of elements.
  const std::size_t m = elems.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& h : homs[elems[e].obj * n + b]) reach[e][lookup(b, apply(w, elems[e].obj, b, h, elems[e].x))] = true;
    }
  }
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
      bool cone = false;
      for (std::size_t e = 0; e < m && !cone; ++e) cone = reach[e][e1] && reach[e][e2];
      if (!cone) {
        rep.verdict = Verdict::fail;
        rep.witnesses.push_back({{"kind", "cone"}, {"first", elem_json(e1)}, {"second", elem_json(e2)}});
        rep.exhaustive = true;
        return rep;
      }
    }
  }
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    const std::size_t a = elems[e1].obj;
    for (std::size_t b = 0; b < n; ++b) {
      const auto& hs = homs[a * n + b];
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const Matrix xi = apply(w, a, b, hs[i], elems[e1].x);
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (apply(w, a, b, hs[j], elems[e1].x) != xi) continue;
          bool equalized = false;
          for (std::size_t e = 0; e < m && !equalized; ++e) {
            const std::size_t cobj = elems[e].obj;
            for (const auto& h : homs[cobj * n + a]) {
              if (apply(w, cobj, a, h, elems[e].x) != elems[e1].x) continue;
              if (c.hom(cobj, b).equal(c.compose(cobj, a, b, hs[i], h), c.compose(cobj, a, b, hs[j], h))) {
                equalized = true;
                break;
              }
            }
          }
          if (!equalized) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back({{"kind", "equalizer"}, {"source", elem_json(e1)}, {"target", elem_json(lookup(b, xi))},
                                     {"f", row_json(hs[i])}, {"g", row_json(hs[j])}});
            rep.exhaustive = true;
            return rep;
          }
        }
      }
    }
  }
  rep.exhaustive = true;
  rep.notes.push_back("exhaustive over " + std::to_string(m) + " elements");
  return rep;
}

namespace {

// Generators of {g ∈ Hom(b, x) : g∘f = 0} for f ∈ Hom(a, b).
Matrix annihilators(const LinearCategory& c, std::size_t a, std::size_t b, std::size_t x, const Matrix& f) {
  const std::size_t g = c.gens(b, x);
  Matrix m(c.ring(), g, c.gens(a, x));
  for (std::size_t k = 0; k < g; ++k) m.set_row(k, c.compose(a, b, x, c.generator(b, x, k), f));
  Matrix ker = kernel(vstack(m, c.hom(a, x).relations()));
  return ker.block(0, 0, ker.rows(), g);
}

// Every annihilator of f into x factors uniquely through q.
bool couniversal(const LinearCategory& c, std::size_t a, std::size_t b, std::size_t target, const Matrix& f,
                 const Matrix& q, std::string& why) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::size_t hq = c.gens(target, x);
    Matrix mq(c.ring(), hq, c.gens(b, x));
    for (std::size_t k = 0; k < hq; ++k) mq.set_row(k, c.compose(b, target, x, c.generator(target, x, k), q));
    Matrix sys = vstack(mq, c.hom(b, x).relations());
    Matrix ann = annihilators(c, a, b, x, f);
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      if (!solve(sys, ann.row(r))) {
        why = "an annihilator into " + c.objects()[x] + " does not factor through q";
        return false;
      }
    }
    Matrix ker = kernel(sys);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      if (!c.hom(target, x).contains(ker.block(r, 0, 1, hq))) {
        why = "factorization into " + c.objects()[x] + " is not unique";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

RecognitionReport check_condition_iii(const LinearFunctor& w, const std::vector<CokernelDeclaration>& declared,
                                      std::size_t bound) {
  RecognitionReport rep{"iii"};
  const LinearCategory& c = w.domain();
  const std::size_t n = c.size();
  for (const auto& d : declared) {
    if (d.from >= n || d.to >= n || d.target >= n || d.f.rows() != 1 || d.f.cols() != c.gens(d.from, d.to) ||
        d.q.rows() != 1 || d.q.cols() != c.gens(d.to, d.target)) {
      throw ValidationError("malformed cokernel declaration");
    }
  }
  bool exhaustive = w.ring().is_finite();
  std::vector<Matrix> ideal;
  bool local = true;
  try {
    ideal = default_maximal_ideal(w.algebra());
  } catch (const UnsupportedError& e) {
    local = false;
    rep.notes.push_back(std::string("freeness of cokernels is not decided: ") + e.what());
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Matrix> candidates;
      for (std::size_t k = 0; k < c.gens(a, b); ++k) candidates.push_back(c.generator(a, b, k));
      if (w.ring().is_finite()) {
        if (auto all = enumerate_elements(c.hom(a, b), bound)) {
          for (auto& f : *all) {
            bool dup = false;
            for (const auto& g : candidates) dup = dup || c.hom(a, b).equal(f, g);
            if (!dup) candidates.push_back(std::move(f));
          }
        } else {
          exhaustive = false;
        }
      }
      for (const auto& f : candidates) {
        json entry{{"from", c.objects()[a]}, {"to", c.objects()[b]}, {"f", row_json(f)}};
        auto mark = [&](Verdict v, const std::string& reason) {
          entry["status"] = to_string(v);
          if (!reason.empty()) entry["reason"] = reason;
          downgrade(rep, v);
          if (v != Verdict::pass) rep.witnesses.push_back(entry);
        };
        Cokernel ck = cokernel(BLinearMap{w.obj(a), w.obj(b), w.map(a, b, f)});
        if (!local) {
          mark(Verdict::unverified, "freeness undecided");
          rep.entries.push_back(entry);
          continue;
        }
        if (!is_free_over_local(ck.module, ideal)) {
          entry["status"] = "not_required";
          rep.entries.push_back(entry);
          continue;
        }
        const CokernelDeclaration* decl = nullptr;
        for (const auto& d : declared) {
          if (d.from == a && d.to == b && c.hom(a, b).equal(d.f, f)) {
            decl = &d;
            break;
          }
        }
        if (!decl) {
          mark(Verdict::unverified, "required cokernel is not declared");
        } else {
          entry["target"] = c.objects()[decl->target];
          std::string why;
          if (!c.hom(a, decl->target).contains(c.compose(a, b, decl->target, decl->q, f))) {
            mark(Verdict::fail, "q∘f != 0");
          } else if (!couniversal(c, a, b, decl->target, f, decl->q, why)) {
            mark(Verdict::fail, why);
          } else if (!is_isomorphism(ck.projection * w.map(b, decl->target, decl->q), ck.module.pres,
                                     w.obj(decl->target).pres)) {
            mark(Verdict::fail, "w(q) does not induce coker w(f) ≅ w(Q)");
          } else {
            mark(Verdict::pass, "");
          }
        }
        rep.entries.push_back(entry);
      }
    }
  }
  rep.exhaustive = exhaustive;
  if (!exhaustive) {
    rep.notes.push_back("only hom generators were examined for some homs");
    downgrade(rep, Verdict::unverified);
  }
  return rep;
}

}  // namespace tannaka
