#include "gmon/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmon/corpus.hpp"
#include "gmon/instance_io.hpp"
#include "json.hpp"

namespace gmon {

using json = nlohmann::ordered_json;

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string key_digest(const std::string& key) {
  std::ostringstream os;
  os << std::hex << fnv64(key);
  return os.str();
}

std::string elem_set_to_string(const Monoid& m, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elems(s)) {
    if (!first) out += ",";
    out += m.name(e);
    first = false;
  }
  return out + "}";
}

Mask parse_elem_set(const Monoid& m, const std::string& text) {
  Mask out = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    for (int i = 0; i < m.n; ++i)
      if (m.name(i) == cur) {
        out |= mask_bit(i);
        cur.clear();
        return;
      }
    try {
      size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used == cur.size() && v >= 0 && v < m.n) {
        out |= mask_bit(v);
        cur.clear();
        return;
      }
    } catch (...) {
    }
    throw ValidationError(Violation{"BadParams", {}});
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  return out;
}

namespace {

std::string witness_str(const Monoid& m, const std::vector<int>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += m.name(w[i]);
  }
  return out + ")";
}

json witness_json(const Monoid& m, const std::vector<int>& w) {
  json a = json::array();
  for (int v : w) a.push_back(m.name(v));
  return a;
}

json set_json(const Monoid& m, Mask s) {
  json a = json::array();
  for (int e : mask_elems(s)) a.push_back(m.name(e));
  return a;
}

std::string chain_to_string(const Monoid& m, const std::vector<Mask>& chain) {
  std::string out;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += elem_set_to_string(m, chain[i]);
  }
  return out;
}

json factor_json(const FactorDescriptor& f) {
  return json{{"size", f.size}, {"type", to_string(f.tag)},
              {"key", key_digest(f.key)}};
}

}  // namespace

Report report_validate(const GammaStructure& gs) {
  Report r;
  std::ostringstream os;
  os << "valid Gamma-monoid, n=" << gs.n() << ", Gamma "
     << (gs.m() == 1 ? "trivial" : "order " + std::to_string(gs.m())) << "\n";
  r.text = os.str();
  r.json = json{{"valid", true}, {"n", gs.n()}, {"group_order", gs.m()}}
               .dump(2) + "\n";
  return r;
}

Report report_props(const GammaStructure& gs) {
  const Monoid& m = gs.monoid;
  auto con = is_conical(m);
  auto can = is_cancellative(m);
  auto ref = is_refinement(m);
  Mask lit = minimal_elements(m, MinimalMode::Literal);
  Mask nz = minimal_elements(m, MinimalMode::Nonzero);

  std::ostringstream os;
  auto line = [&](const char* what, const PropertyVerdict& v) {
    os << what << ": " << (v.ok ? "true" : "false");
    if (!v.ok) os << " " << witness_str(m, v.witness);
    os << "\n";
  };
  line("conical", con);
  line("cancellative", can);
  line("refinement", ref);
  os << "minimal (literal): " << elem_set_to_string(m, lit) << "\n";
  os << "minimal (nonzero): " << elem_set_to_string(m, nz) << "\n";

  json j;
  auto jline = [&](const char* what, const PropertyVerdict& v) {
    j[what] = v.ok;
    if (!v.ok) j[std::string(what) + "_witness"] = witness_json(m, v.witness);
  };
  jline("conical", con);
  jline("cancellative", can);
  jline("refinement", ref);
  j["minimal_literal"] = set_json(m, lit);
  j["minimal_nonzero"] = set_json(m, nz);

  Report r;
  r.text = os.str();
  r.json = j.dump(2) + "\n";
  return r;
}

Report report_ideals(const GammaStructure& gs) {
  const Monoid& m = gs.monoid;
  IdealLattice lat = all_order_ideals(gs);
  auto at = atoms(lat);
  bool simple = lat.ideals.size() <= 2;

  std::ostringstream os;
  os << "ideals: " << lat.ideals.size() << "\n";
  for (Mask s : lat.ideals) os << "  " << elem_set_to_string(m, s) << "\n";
  os << "covers:\n";
  for (auto [i, j] : lat.covers)
    os << "  " << elem_set_to_string(m, lat.ideals[i]) << " < "
       << elem_set_to_string(m, lat.ideals[j]) << "\n";
  os << "atoms:";
  for (Mask s : at) os << " " << elem_set_to_string(m, s);
  os << "\n";
  os << "simple: " << (simple ? "true" : "false") << "\n";

  json j;
  j["ideals"] = json::array();
  for (Mask s : lat.ideals) j["ideals"].push_back(set_json(m, s));
  j["covers"] = json::array();
  for (auto [i, k] : lat.covers)
    j["covers"].push_back(json::array({i, k}));
  j["atoms"] = json::array();
  for (Mask s : at) j["atoms"].push_back(set_json(m, s));
  j["simple"] = simple;

  Report r;
  r.text = os.str();
  r.json = j.dump(2) + "\n";
  return r;
}

Report report_quotient(const GammaStructure& gs, Mask ideal,
                       std::string* quotient_instance) {
  const Monoid& m = gs.monoid;
  QuotientPresentation qp = quotient(gs, ideal);
  std::string inst = print_instance(qp.quotient);
  if (quotient_instance) *quotient_instance = inst;

  std::ostringstream os;
  os << "ideal: " << elem_set_to_string(m, ideal) << "\n";
  os << "classes: " << qp.classes.size() << "\n";
  for (int c = 0; c < qp.classes.size(); ++c)
    os << "  " << qp.quotient.monoid.name(c) << " = "
       << elem_set_to_string(m, mask_of(qp.classes.blocks[c])) << "\n";
  os << "projection:";
  for (int e = 0; e < m.n; ++e)
    os << " " << m.name(e) << "->" << qp.quotient.monoid.name(qp.projection[e]);
  os << "\n";
  os << "quotient instance:\n" << inst;

  json j;
  j["ideal"] = set_json(m, ideal);
  j["classes"] = json::array();
  for (int c = 0; c < qp.classes.size(); ++c)
    j["classes"].push_back(set_json(m, mask_of(qp.classes.blocks[c])));
  j["projection"] = qp.projection;
  j["quotient_instance"] = inst;

  Report r;
  r.text = os.str();
  r.json = j.dump(2) + "\n";
  return r;
}

Report report_series(const GammaStructure& gs) {
  const Monoid& m = gs.monoid;
  auto all = all_composition_series(gs);
  auto rep = chain_condition_report(gs);

  std::ostringstream os;
  json j;
  os << "composition series: " << all.size() << "\n";
  j["series"] = json::array();
  for (const auto& s : all) {
    os << "  " << chain_to_string(m, s.chain) << "\n";
    json js;
    js["chain"] = json::array();
    for (Mask t : s.chain) js["chain"].push_back(set_json(m, t));
    js["factors"] = json::array();
    for (size_t i = 0; i + 1 < s.chain.size(); ++i) {
      GammaStructure f = series_factor(gs, s, static_cast<int>(i));
      FactorDescriptor fd{factor_key(f), f.n(), classify_simple(f)};
      os << "    factor " << i + 1 << ": size=" << fd.size << " type="
         << to_string(fd.tag) << " key=" << key_digest(fd.key) << "\n";
      js["factors"].push_back(factor_json(fd));
    }
    j["series"].push_back(js);
  }
  bool all_equiv = true;
  for (size_t i = 1; i < all.size(); ++i)
    if (!series_equivalent(gs, all[0], all[i]).equivalent) all_equiv = false;
  os << "all equivalent: " << (all_equiv ? "true" : "false") << "\n";
  os << "lattice height: " << rep.height << "\n";
  os << "series length bound holds: " << (rep.bound_holds ? "true" : "false")
     << "\n";
  j["all_equivalent"] = all_equiv;
  j["height"] = rep.height;
  j["bound_holds"] = rep.bound_holds;

  Report r;
  r.text = os.str();
  r.json = j.dump(2) + "\n";
  return r;
}

namespace {

Series build_series(const GammaStructure& gs, const std::vector<Mask>& mid) {
  Series s;
  Mask bottom = zero_ideal(gs);
  s.chain.push_back(bottom);
  for (Mask t : mid)
    if (t != bottom && t != full_mask(gs.n())) s.chain.push_back(t);
  s.chain.push_back(full_mask(gs.n()));
  return s;
}

}  // namespace

Report report_jh(const GammaStructure& gs, const std::vector<Mask>& mid1,
                 const std::vector<Mask>& mid2) {
  const Monoid& m = gs.monoid;
  Series s1 = build_series(gs, mid1);
  Series s2 = build_series(gs, mid2);
  SchreierResult sr = schreier_refinement(gs, s1, s2);

  std::ostringstream os;
  os << "series 1: " << chain_to_string(m, s1.chain) << "\n";
  os << "series 2: " << chain_to_string(m, s2.chain) << "\n";
  os << "refinement 1: " << chain_to_string(m, sr.refined1.chain) << "\n";
  os << "refinement 2: " << chain_to_string(m, sr.refined2.chain) << "\n";
  os << "collapsed steps: " << sr.collapsed1 << " " << sr.collapsed2 << "\n";
  os << "factor pairs verified: " << sr.pairing.size() << "\n";
  os << "equivalent: " << (sr.all_pairs_isomorphic ? "true" : "false") << "\n";

  json j;
  auto chain_json = [&](const Series& s) {
    json a = json::array();
    for (Mask t : s.chain) a.push_back(set_json(m, t));
    return a;
  };
  j["series1"] = chain_json(s1);
  j["series2"] = chain_json(s2);
  j["refinement1"] = chain_json(sr.refined1);
  j["refinement2"] = chain_json(sr.refined2);
  j["collapsed"] = json::array({sr.collapsed1, sr.collapsed2});
  j["pairs_verified"] = sr.pairing.size();
  j["equivalent"] = sr.all_pairs_isomorphic;

  Report r;
  r.text = os.str();
  r.json = j.dump(2) + "\n";
  r.status = sr.all_pairs_isomorphic ? 0 : 1;
  return r;
}

Report report_demo(const std::string& name) {
  if (name == "paper-counterexample") {
    GammaStructure gs = paper_t7();
    const Monoid& m = gs.monoid;
    Mask A = parse_elem_set(m, "0,1,x");
    Mask B = parse_elem_set(m, "0,y,z");
    auto sum = ideal_sum(gs, A, B);
    auto ref = is_refinement(m);

    std::ostringstream os;
    os << "T7 counterexample\n";
    os << "A = " << elem_set_to_string(m, A)
       << " is order ideal: " << (is_order_ideal(gs, A).ok ? "true" : "false")
       << "\n";
    os << "B = " << elem_set_to_string(m, B)
       << " is order ideal: " << (is_order_ideal(gs, B).ok ? "true" : "false")
       << "\n";
    os << "A+B = " << elem_set_to_string(m, sum.sum) << "\n";
    os << "A+B is order ideal: " << (sum.verdict.ok ? "true" : "false")
       << ", violation " << sum.verdict.reason << " "
       << witness_str(m, {sum.verdict.witness[2], sum.verdict.witness[3]})
       << "\n";
    os << "refinement: " << (ref.ok ? "true" : "false") << " "
       << witness_str(m, ref.witness) << "\n";

    json j;
    j["A"] = set_json(m, A);
    j["B"] = set_json(m, B);
    j["sum"] = set_json(m, sum.sum);
    j["sum_is_ideal"] = sum.verdict.ok;
    j["sum_violation"] =
        witness_json(m, {sum.verdict.witness[2], sum.verdict.witness[3]});
    j["refinement"] = ref.ok;
    j["refinement_witness"] = witness_json(m, ref.witness);

    Report r;
    r.text = os.str();
    r.json = j.dump(2) + "\n";
    return r;
  }
  if (name == "paper-shift") {
    GammaStructure gs = builtin("shifted-power(1,4)");
    Report props = report_props(gs);
    Report ser = report_series(gs);
    Report r;
    r.text = "shifted-power(1,4)\n" + props.text + ser.text;
    json j;
    j["instance"] = "shifted-power(1,4)";
    j["props"] = json::parse(props.json);
    j["series"] = json::parse(ser.json);
    r.json = j.dump(2) + "\n";
    return r;
  }
  throw ValidationError(Violation{"BadParams", {}});
}

Report corpus_emit(const CorpusOptions& opts, const std::string& out_dir) {
  namespace fs = std::filesystem;
  ActionSource src;
  if (opts.action_source == "trivial")
    src = ActionSource::Trivial;
  else if (opts.action_source == "all-cyclic-subgroups")
    src = ActionSource::AllCyclicSubgroups;
  else if (opts.action_source == "full-automorphism-subgroups")
    src = ActionSource::FullAutomorphismSubgroups;
  else
    throw ValidationError(Violation{"BadParams", {}});

  fs::create_directories(out_dir);
  std::ostringstream manifest;
  for (int n = 1; n <= opts.max_size; ++n) {
    auto monoids = enumerate_monoids(n);
    for (size_t mi = 0; mi < monoids.size(); ++mi) {
      const Monoid& mo = monoids[mi];
      if (opts.filter_refinement && !is_refinement(mo).ok) continue;
      if (opts.filter_conical && !is_conical(mo).ok) continue;
      if (opts.filter_cancellative && !is_cancellative(mo).ok) continue;
      auto bundles = attach_actions(mo, src);
      for (size_t ai = 0; ai < bundles.size(); ++ai) {
        const GammaStructure& gs = bundles[ai];
        std::ostringstream fname;
        fname << "m" << n << "_" << mi << "_a" << ai << ".txt";
        std::ofstream out(fs::path(out_dir) / fname.str());
        out << print_instance(gs);
        manifest << fname.str() << " n=" << n << " m=" << gs.m()
                 << " conical=" << (is_conical(mo).ok ? 1 : 0)
                 << " cancellative=" << (is_cancellative(mo).ok ? 1 : 0)
                 << " refinement=" << (is_refinement(mo).ok ? 1 : 0)
                 << " key=" << key_digest(canonical_form(gs)) << "\n";
      }
    }
  }
  std::ofstream mf(fs::path(out_dir) / "MANIFEST.txt");
  mf << manifest.str();

  Report r;
  r.text = manifest.str();
  json j;
  j["out_dir"] = out_dir;
  j["manifest"] = manifest.str();
  r.json = j.dump(2) + "\n";
  return r;
}

}  // namespace gmon
