#include "tannaka/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace tannaka {

namespace {

class Recorder {
 public:
  void add(const std::string& id, const CheckReport& r) {
    checks_.push_back(json{{"id", id}, {"verdict", r.ok() ? "pass" : "fail"}, {"violations", report_to_json(r)}});
    if (!r.ok()) failed_ = true;
  }
  void add(const std::string& id, Verdict v, json witnesses = json::array()) {
    checks_.push_back(json{{"id", id}, {"verdict", to_string(v)}, {"violations", std::move(witnesses)}});
    if (v == Verdict::fail) failed_ = true;
    if (v == Verdict::unverified) unverified_ = true;
  }
  void error(const std::string& id, const std::string& message) {
    CheckReport r;
    r.fail(id, message);
    add(id, r);
  }
  bool failed() const { return failed_; }
  json& results() { return results_; }

  RunResult finish(const std::string& command) const {
    const char* verdict = failed_ ? "fail" : unverified_ ? "unverified" : "pass";
    json report{{"command", command}, {"verdict", verdict}, {"checks", checks_}, {"results", results_}};
    return RunResult{failed_ ? exit_failure : exit_pass, std::move(report)};
  }

 private:
  json checks_ = json::array();
  json results_ = json::object();
  bool failed_ = false;
  bool unverified_ = false;
};

const LinearFunctor& need_functor(const ModelDocument& doc, const std::string& command) {
  if (!doc.functor) throw ParseError("functor", "missing field (required by " + command + ")");
  return *doc.functor;
}

json carrier_json(const Presentation& p) {
  auto free = p.free_rank();
  json out{{"ambient", p.rank()}, {"relations", serialize_matrix(p.relations())}};
  out["free_rank"] = free ? json(*free) : json(nullptr);
  return out;
}

void write_export(const RunOptions& opt, const ModelDocument& doc) {
  if (!opt.export_path) return;
  std::ofstream out(*opt.export_path);
  if (!out) throw ValidationError("cannot write " + *opt.export_path);
  out << serialize_model(doc).dump(2) << "\n";
}

std::string label_of(const LinearCategory& c, std::size_t a) { return c.objects()[a]; }

RunResult run_check(const ModelDocument& doc) {
  Recorder rec;
  if (!doc.algebra.is_trivial()) rec.add("algebra", doc.algebra.check());
  if (doc.category && !doc.functor) rec.add("category", check_category(*doc.category));
  if (doc.functor) {
    rec.add("category", check_category(doc.functor->domain()));
    rec.add("functor", check_functor(*doc.functor));
  }
  if (auto m = doc.monoidal_model()) {
    rec.add("monoidal", check_monoidal_data(m->functor, m->mon, m->fmon, m->sym ? &*m->sym : nullptr,
                                            m->dual ? &*m->dual : nullptr));
  }
  if (doc.coalgebroid) {
    rec.add("coalgebroid", check_coalgebroid(*doc.coalgebroid));
    if (auto bi = doc.bialgebroid_value()) {
      rec.add("bialgebroid", check_bialgebroid(*bi, doc.bialgebroid->commutative));
      if (bi->antipode) rec.add("antipode", check_antipode(*bi, *bi->antipode));
    }
    for (const auto& e : doc.comodules) {
      rec.add("comodule." + e.label, check_comodule(Comodule{*doc.coalgebroid, e.module, e.rho}));
    }
  }
  if (doc.fl) {
    for (const auto& x : doc.fl->objects) rec.add("fl." + x.label, check_fl_object(x));
  }
  return rec.finish("check");
}

RunResult run_reconstruct(const ModelDocument& doc, const RunOptions& opt) {
  const LinearFunctor& w = need_functor(doc, "reconstruct");
  Recorder rec;
  auto mm = doc.monoidal_model();
  bool monoidal_ok = false;
  if (mm) {
    CheckReport r = check_monoidal_model(*mm);
    rec.add("monoidal", r);
    monoidal_ok = r.ok();
  }
  CoendPresentation p = [&] {
    try {
      return coend(w);
    } catch (const ValidationError& e) {
      rec.add("functor", check_functor(w));
      throw;
    }
  }();
  Coalgebroid c = induced_coalgebroid(p);
  rec.add("coalgebroid", check_coalgebroid(c));
  rec.add("coaction.naturality", check_coaction_naturality(p, c));
  for (std::size_t a = 0; a < w.domain().size(); ++a) {
    rec.add("coaction." + label_of(w.domain(), a), check_comodule(universal_coaction(p, c, a)));
  }
  json& res = rec.results();
  res["carrier"] = carrier_json(p.carrier());
  ModelDocument out = document_for(c);
  if (mm && monoidal_ok) {
    try {
      Bialgebroid bi = induced_bialgebroid(p, c, mm->mon, mm->fmon);
      const bool commutative = mm->sym.has_value();
      rec.add("bialgebroid", check_bialgebroid(bi, commutative));
      if (mm->dual) {
        Matrix s = induced_antipode(bi, p, mm->mon, mm->fmon, *mm->dual);
        rec.add("antipode", check_antipode(bi, s));
        bi.antipode = s;
      }
      FusionOperators fu = fusion_operators(bi);
      json fusion{{"right_bijective", fu.right_bijective}, {"left_bijective", fu.left_bijective}, {"hopf", fu.hopf()}};
      auto wit = [&](const char* key, const std::optional<Matrix>& m) {
        if (m) fusion[key] = serialize_matrix(*m);
      };
      wit("right_kernel", fu.right_kernel);
      wit("right_cokernel", fu.right_cokernel);
      wit("left_kernel", fu.left_kernel);
      wit("left_cokernel", fu.left_cokernel);
      res["fusion"] = fusion;
      out.bialgebroid = BialgebroidSection{bi.mu, bi.unit, bi.s_map, bi.t_map, bi.antipode, commutative};
    } catch (const ValidationError& e) {
      rec.error("bialgebroid", e.what());
    }
  }
  res["export"] = serialize_model(out);
  write_export(opt, out);
  return rec.finish("reconstruct");
}

RunResult run_counit(const ModelDocument& doc) {
  if (!doc.coalgebroid) throw ParseError("coalgebroid", "missing field (required by counit)");
  if (doc.comodules.empty()) throw ParseError("comodules", "missing field (required by counit)");
  Recorder rec;
  std::vector<std::pair<Comodule, Matrix>> family;
  for (const auto& e : doc.comodules) family.push_back({Comodule{*doc.coalgebroid, e.module, e.rho}, e.phi});
  try {
    CounitComparison cmp = counit_comparison(*doc.coalgebroid, family);
    json res{{"verdict", to_string(cmp.verdict)}, {"colimit", carrier_json(cmp.colimit)},
             {"comparison", serialize_matrix(cmp.comparison)}};
    if (cmp.witness) res["witness"] = serialize_matrix(*cmp.witness);
    rec.results()["counit"] = res;
    CheckReport r;
    if (cmp.verdict != CounitVerdict::iso) {
      r.fail("counit.iso", std::string("comparison is ") + to_string(cmp.verdict),
             cmp.witness ? json{{"vector", serialize_matrix(*cmp.witness)}} : json::object());
    }
    rec.add("counit", r);
  } catch (const ValidationError& e) {
    rec.error("counit", e.what());
  }
  return rec.finish("counit");
}

RunResult run_recognize(const ModelDocument& doc, const RunOptions& opt) {
  const LinearFunctor& w = need_functor(doc, "recognize");
  Recorder rec;
  const std::vector<CokernelDeclaration> none;
  RecognitionReport reps[] = {check_condition_i(w, opt.bound), check_condition_ii(w, opt.bound),
                              check_condition_iii(w, doc.cokernels ? *doc.cokernels : none, opt.bound)};
  for (const auto& r : reps) {
    rec.add("condition_" + r.condition, r.verdict, r.witnesses);
    rec.results()["condition_" + r.condition] = to_json(r);
  }
  return rec.finish("recognize");
}

RunResult run_fl(const ModelDocument& doc, const RunOptions& opt) {
  if (!doc.fl) throw ParseError("fl", "missing field (required by fl)");
  const auto& objs = doc.fl->objects;
  Recorder rec;
  for (const auto& x : objs) rec.add("fl." + x.label, check_fl_object(x));
  json& res = rec.results();
  res["p"] = doc.fl->p;
  res["n"] = doc.fl->n;
  if (rec.failed()) return rec.finish("fl");

  json homs = json::array();
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      FLHom h = fl_hom_space(x, y);
      auto card = h.space.module.cardinality();
      homs.push_back(json{{"from", x.label}, {"to", y.label}, {"generators", h.maps.size()},
                          {"cardinality", card ? json(card->get_str()) : json(nullptr)}});
    }
  }
  res["homs"] = homs;

  CheckReport tens;
  json table = json::array();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i; j < objs.size(); ++j) {
      json e{{"left", objs[i].label}, {"right", objs[j].label}};
      try {
        FLObject t = fl_tensor(objs[i], objs[j]);
        e["rank"] = t.rank;
        e["window"] = {t.lo, t.hi};
        json match = nullptr;
        for (const auto& z : objs) {
          if (fl_isomorphism(t, z, opt.bound)) {
            match = z.label;
            break;
          }
        }
        e["isomorphic_to"] = match;
      } catch (const ValidationError& err) {
        tens.fail("fl.tensor", err.what(), {{"left", objs[i].label}, {"right", objs[j].label}});
      }
      table.push_back(e);
    }
  }
  res["tensors"] = table;
  rec.add("fl.tensor", tens);

  LinearFunctor w = fl_to_category(objs);
  rec.add("category", check_category(w.domain()));
  rec.add("functor", check_functor(w));
  ModelDocument out = document_for(w);
  out.fl = doc.fl;
  write_export(opt, out);
  if (rec.failed()) return rec.finish("fl");

  CoendPresentation p = coend(w);
  Coalgebroid c = induced_coalgebroid(p);
  rec.add("coalgebroid", check_coalgebroid(c));
  json L = carrier_json(p.carrier());
  try {
    auto ideal = default_maximal_ideal(c.algebra);
    const bool s = is_free_over_local(c.source_module(), ideal).has_value();
    const bool t = is_free_over_local(c.target_module(), ideal).has_value();
    L["free_source"] = s;
    L["free_target"] = t;
    CheckReport r;
    if (!s) r.fail("L.free_source", "L is not free for the source action");
    if (!t) r.fail("L.free_target", "L is not free for the target action");
    rec.add("L.free", r);
  } catch (const UnsupportedError& e) {
    rec.add("L.free", Verdict::unverified, json::array({json{{"message", e.what()}}}));
  }
  res["L"] = L;
  return rec.finish("fl");
}

RunResult run_basechange(const ModelDocument& doc, const RunOptions& opt) {
  std::optional<Ring> target = doc.basechange_target;
  if (!target && opt.p && opt.n) target = fl_ring(*opt.p, *opt.n);
  if (!target) throw ParseError("basechange", "missing field (or pass --p and --n)");
  RingMap h(doc.ring, *target);
  Recorder rec;
  json& res = rec.results();
  res["source"] = serialize_ring(doc.ring);
  res["target"] = serialize_ring(*target);
  ModelDocument out(*target);
  out.algebra = base_change(h, doc.algebra);
  if (doc.functor) {
    CoendPresentation p = coend(*doc.functor);
    Coalgebroid c = induced_coalgebroid(p);
    LinearFunctor wbc = base_change(h, *doc.functor);
    rec.add("functor", check_functor(wbc));
    CoendPresentation pbc = coend(wbc);
    Coalgebroid cbc = induced_coalgebroid(pbc);
    rec.add("coalgebroid", check_coalgebroid(cbc));
    Matrix cmp = base_change_comparison(h, p, pbc);
    rec.add("comparison", check_coalgebroid_isomorphism(base_change(h, c), cbc, cmp));
    res["carrier"] = carrier_json(pbc.carrier());
    res["comparison"] = serialize_matrix(cmp);
    out.category = wbc.domain();
    out.functor = wbc;
  }
  if (doc.coalgebroid) {
    Coalgebroid moved = base_change(h, *doc.coalgebroid);
    rec.add("coalgebroid.transported", check_coalgebroid(moved));
    out.coalgebroid = moved;
  }
  if (!doc.functor && !doc.coalgebroid) throw ParseError("functor", "missing field (required by basechange)");
  write_export(opt, out);
  return rec.finish("basechange");
}

json error_report(const std::string& command, const char* verdict, const std::string& message,
                  const std::string& path = "") {
  json err{{"message", message}};
  if (!path.empty()) err["path"] = path;
  return json{{"command", command}, {"verdict", verdict}, {"checks", json::array()}, {"results", json::object()},
              {"error", err}};
}

}  // namespace

RunResult run_command(const std::string& command, const ModelDocument& doc, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  try {
    if (command == "check") {
      out = run_check(doc);
    } else if (command == "reconstruct") {
      out = run_reconstruct(doc, options);
    } else if (command == "counit") {
      out = run_counit(doc);
    } else if (command == "recognize") {
      out = run_recognize(doc, options);
    } else if (command == "fl") {
      out = run_fl(doc, options);
    } else if (command == "basechange") {
      out = run_basechange(doc, options);
    } else {
      out = {exit_parse, error_report(command, "parse_error", "unknown command '" + command + "'")};
    }
  } catch (const ParseError& e) {
    out = {exit_parse, error_report(command, "parse_error", e.what(), e.path())};
  } catch (const UnsupportedError& e) {
    out = {exit_unsupported, error_report(command, "unsupported", e.what())};
  } catch (const ValidationError& e) {
    out = {exit_failure, error_report(command, "fail", e.what())};
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report["timing"] = json{{"milliseconds", ms}};
  return out;
}

RunResult run_file(const std::string& command, const std::string& path, const RunOptions& options) {
  try {
    ModelDocument doc = parse_model_file(path, ParseOptions{options.p, options.n});
    return run_command(command, doc, options);
  } catch (const ParseError& e) {
    return {exit_parse, error_report(command, "parse_error", e.what(), e.path())};
  } catch (const UnsupportedError& e) {
    return {exit_unsupported, error_report(command, "unsupported", e.what())};
  }
}

std::string render_report(const json& report) {
  std::ostringstream os;
  os << report.value("command", "?") << ": " << report.value("verdict", "?") << "\n";
  if (report.contains("error")) os << "  error: " << report["error"].value("message", "") << "\n";
  for (const auto& c : report["checks"]) {
    os << "  [" << c["verdict"].get<std::string>() << "] " << c["id"].get<std::string>() << "\n";
    std::size_t shown = 0;
    for (const auto& v : c["violations"]) {
      if (shown++ == 3) {
        os << "      ... " << c["violations"].size() - 3 << " more\n";
        break;
      }
      if (v.contains("message")) {
        os << "      " << v.value("check", "") << ": " << v["message"].get<std::string>() << "\n";
      } else {
        os << "      " << v.dump() << "\n";
      }
    }
  }
  const json& res = report["results"];
  if (res.contains("carrier")) {
    const json& car = res["carrier"];
    os << "  L: ambient " << car["ambient"];
    if (!car["free_rank"].is_null()) os << ", free of rank " << car["free_rank"];
    os << "\n";
  }
  if (res.contains("fusion")) os << "  hopf: " << res["fusion"]["hopf"] << "\n";
  if (res.contains("counit")) os << "  counit: " << res["counit"]["verdict"].get<std::string>() << "\n";
  if (res.contains("L")) {
    os << "  L: ambient " << res["L"]["ambient"] << ", free for s " << res["L"].value("free_source", false)
       << ", free for t " << res["L"].value("free_target", false) << "\n";
  }
  return os.str();
}

}  // namespace tannaka
