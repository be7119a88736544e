// ltrop command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ltrop/ltrop.hpp"

using namespace ltrop;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::string vars, ideal, w, N = "10", mode = "puiseux", d;
  std::uint64_t seed = 0;
  bool json = false;
  // command-specific
  std::vector<std::string> g;
  std::string queries, vars2, ideal2, w2, point, coeffs;
  std::size_t budget = 64;
};

struct Loaded {
  Ring ring;
  std::vector<Polynomial> gens;
  bool local = true;
  std::string w;  // weight declared by a fixture file, if any
};

std::string trim(const std::string& s) { return std::string(detail::trim(s)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Fixture format: "vars: x,y", optional "order: local|global" and "w: 2,3"
// lines, then one generator per line. '#' starts a comment.
Loaded load_ideal(const std::string& vars, const std::string& ideal) {
  Loaded L;
  std::vector<std::string> gen_text;
  std::string file_vars;
  if (!ideal.empty() && ideal[0] == '@') {
    for (std::string line : split(read_file(ideal.substr(1)), "\n")) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      line = trim(line);
      if (line.empty()) continue;
      auto colon = line.find(':');
      std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
      if (key == "vars") {
        file_vars = trim(line.substr(colon + 1));
      } else if (key == "order") {
        std::string o = trim(line.substr(colon + 1));
        if (o == "local") L.local = true;
        else if (o == "global") L.local = false;
        else throw UsageError("unknown order '" + o + "'");
      } else if (key == "w") {
        L.w = trim(line.substr(colon + 1));
      } else {
        gen_text.push_back(line);
      }
    }
  } else {
    for (const auto& part : split(ideal, ";,\n"))
      if (!trim(part).empty()) gen_text.push_back(part);
  }
  if (!file_vars.empty() && !vars.empty() && parse_vars(file_vars).vars != parse_vars(vars).vars)
    throw UsageError("--vars disagrees with the variables declared in the ideal file");
  std::string v = vars.empty() ? file_vars : vars;
  if (v.empty()) throw UsageError("missing --vars");
  L.ring = parse_vars(v);
  if (gen_text.empty()) throw UsageError("missing --ideal");
  for (const auto& t : gen_text) L.gens.push_back(parse_polynomial(t, L.ring));
  return L;
}

IdealPresentation local_ideal(const Loaded& L) {
  if (!L.local) throw UsageError("this command works in the power series ring; the ideal file declares a global order");
  return IdealPresentation::local(L.ring.size(), L.gens);
}

void check_d(const Config& c, const std::vector<ExtValue>& w) {
  if (c.d.empty()) return;
  Integer d = parse_integer(trim(c.d));
  if (!d.fits_slong_p() || d < 2 || !is_squarefree(d.get_si())) throw UsageError("--d must be a squarefree integer >= 2");
  for (const auto& v : w)
    if (v.is_finite() && v.value().sqrt_part() != 0 && v.value().d() != d.get_si())
      throw UsageError("weight entry " + v.to_string() + " uses a different square root than --d " + c.d);
}

std::vector<ExtValue> ext_weight(const Config& c, const std::string& text) {
  if (trim(text).empty()) throw UsageError("missing --w");
  auto w = parse_ext_weight(text);
  check_d(c, w);
  return w;
}

std::vector<ValueScalar> finite_weight(const Config& c, const std::string& text) {
  std::vector<ValueScalar> out;
  for (const auto& v : ext_weight(c, text)) {
    if (v.is_infinite()) throw UsageError("this command needs finite weights");
    out.push_back(v.value());
  }
  return out;
}

std::string weight_text(const Config& c, const Loaded& L) { return c.w.empty() ? L.w : c.w; }

ordered_json strings(const std::vector<Polynomial>& ps, const Ring& ring) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(to_string(p, ring));
  return a;
}

template <class T>
ordered_json texts(const std::vector<T>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

ordered_json rows(const std::vector<ZRow>& rs) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json row = ordered_json::array();
    for (const auto& v : r) row.push_back(v.get_si());
    a.push_back(row);
  }
  return a;
}

ordered_json cone_json(const Cone& c) { return ordered_json{{"eq", rows(c.eq)}, {"ineq", rows(c.ineq)}}; }

ordered_json qvec(const QVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Ring sub_ring(const Ring& ring, const std::vector<std::size_t>& idx) {
  Ring r;
  for (auto i : idx) r.vars.push_back(ring.vars[i]);
  return r;
}

// Emits one record: a JSON line, or "key: value" lines followed by a blank line.
void emit(const Config& c, std::ostream& out, const ordered_json& j) {
  if (c.json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  out << "\n";
}

ordered_json member_json(const TropMemberResult& r, const std::vector<ExtValue>& w, const Ring& ring) {
  Ring kept = sub_ring(ring, r.kept);
  ordered_json witness{{"zeroed", ordered_json::array()}, {"initial", strings(r.initial, kept)}};
  for (auto i : r.zeroed) witness["zeroed"].push_back(ring.vars[i]);
  if (r.witness) witness["monomial"] = monomial_string(*r.witness, kept).empty() ? "1" : monomial_string(*r.witness, kept);
  return ordered_json{{"w", texts(w)}, {"member", r.member}, {"witness", witness}};
}

int cmd_init_form(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = finite_weight(c, weight_text(c, L));
  for (const auto& g : L.gens)
    emit(c, out,
         {{"poly", to_string(g, L.ring)}, {"w_order", w_order(g, w).to_string()}, {"initial_form", to_string(initial_form(g, w), L.ring)}});
  return 0;
}

int cmd_init_ideal(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = finite_weight(c, weight_text(c, L));
  auto data = initial_ideal(local_ideal(L), w);
  emit(c, out,
       {{"w", texts(w)},
        {"generators", strings(data.generators, L.ring)},
        {"basis", strings(data.basis, L.ring)},
        {"monomial_free", initial_is_monomial_free(data, L.ring.size())}});
  return 0;
}

int cmd_coset_val(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = finite_weight(c, weight_text(c, L));
  if (c.g.empty()) throw UsageError("missing --g");
  CosetValuationHandle h(local_ideal(L), w);
  for (const auto& text : c.g) {
    auto g = parse_polynomial(text, L.ring);
    emit(c, out, {{"g", to_string(g, L.ring)}, {"value", coset_valuation(g, h).to_string()}});
  }
  return 0;
}

int cmd_cone(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = finite_weight(c, weight_text(c, L));
  auto gc = groebner_cone(local_ideal(L), w);
  out << (c.json ? cone_json(gc.cone).dump() : gc.to_json()) << "\n";
  return 0;
}

int cmd_trop_member(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto I = local_ideal(L);
  std::vector<std::string> batch;
  if (!c.queries.empty()) {
    std::string text = c.queries[0] == '@' ? read_file(c.queries.substr(1)) : c.queries;
    for (std::string line : split(text, c.queries[0] == '@' ? "\n" : ";")) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (!trim(line).empty()) batch.push_back(trim(line));
    }
    if (!c.w.empty()) throw UsageError("give either --w or --queries");
  } else {
    batch.push_back(weight_text(c, L));
  }
  // Queries run in input order; every one is answered before the exit code is chosen.
  bool all = true;
  for (const auto& q : batch) {
    auto w = ext_weight(c, q);
    auto r = trop_member(I, w);
    all = all && r.member;
    emit(c, out, member_json(r, w, L.ring));
  }
  return all ? 0 : 1;
}

ordered_json trop_cone_json(const TropCone& tc, const Ring& ring) {
  auto j = cone_json(tc.cone.cone);
  j["dim"] = tc.dim;
  j["relint"] = qvec(tc.relint);
  j["member"] = tc.member;
  j["initial"] = strings(tc.initial, ring);
  return j;
}

int cmd_trop_hyper(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  if (L.gens.size() != 1) throw UsageError("trop-hyper takes exactly one polynomial");
  for (const auto& tc : trop_hypersurface(L.gens[0])) emit(c, out, trop_cone_json(tc, L.ring));
  return 0;
}

int cmd_trop_enum(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto fan = trop_enumerate(local_ideal(L), c.budget, c.seed);
  std::size_t members = 0;
  for (const auto& tc : fan.cones) {
    members += tc.member;
    emit(c, out, trop_cone_json(tc, L.ring));
  }
  ordered_json start = ordered_json::array();
  for (const auto& v : fan.start) start.push_back(v.get_si());
  emit(c, out, {{"cones", fan.cones.size()}, {"members", members}, {"truncated", fan.truncated}, {"start", start}});
  return 0;
}

int cmd_tensor(const Config& c, std::ostream& out) {
  auto A = load_ideal(c.vars, c.ideal);
  auto B = load_ideal(c.vars2, c.ideal2);
  auto w1 = finite_weight(c, weight_text(c, A));
  auto w2 = finite_weight(c, c.w2.empty() ? B.w : c.w2);
  auto r = tensor_combine(A.ring, local_ideal(A), w1, B.ring, local_ideal(B), w2);
  ordered_json vars = r.ring.vars;
  emit(c, out,
       {{"vars", vars},
        {"ideal", strings(r.ideal.generators(), r.ring)},
        {"w", texts(r.w)},
        {"step3_initial_equality", r.step3_initial_equality},
        {"inputs_monomial_free", r.inputs_monomial_free},
        {"step4_monomial_free", r.step4_monomial_free},
        {"certificate", r.certificate()}});
  return r.certificate() ? 0 : 1;
}

ordered_json series_texts(const std::vector<ValuedSeries>& s) {
  ordered_json a = ordered_json::array();
  for (const auto& x : s) a.push_back(x.to_string());
  return a;
}

int cmd_lift(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = ext_weight(c, weight_text(c, L));
  LiftOptions opts;
  opts.N = parse_value(c.N);
  opts.mode = parse_mode(c.mode);
  opts.seed = c.seed;
  auto res = lift_point(local_ideal(L), w, opts);
  Ring kept = sub_ring(L.ring, res.coordinates);
  ordered_json descents = ordered_json::array();
  for (const auto& s : res.descents) {
    ordered_json wp = ordered_json::array(), slice = ordered_json::array();
    for (const auto& v : s.w_prime) wp.push_back(v.get_si());
    for (auto i : s.slice) slice.push_back(kept.vars[i]);
    descents.push_back({{"w_prime", wp},
                        {"J", strings(s.J, kept)},
                        {"slice", slice},
                        {"x0", texts(s.x0)},
                        {"y0", texts(s.y0)},
                        {"f_tilde", to_string(s.f_tilde, kept)},
                        {"f", to_string(s.f, kept)},
                        {"nonzerodivisor", s.nonzerodivisor},
                        {"additivity", s.additivity},
                        {"monomial_free", s.monomial_free},
                        {"dim_before", s.dim_before},
                        {"dim_after", s.dim_after}});
  }
  ordered_json params = ordered_json::array();
  for (auto i : res.parameters) params.push_back(kept.vars[i]);
  emit(c, out,
       {{"point", series_texts(res.point)},
        {"achieved", texts(res.report.achieved)},
        {"residual_bounds", texts(res.report.residuals)},
        {"descents", descents},
        {"rank", res.span.r},
        {"dimension", res.dimension},
        {"parameters", params},
        {"field", res.field.describe()},
        {"pass", res.report.pass}});
  return res.report.pass ? 0 : 1;
}

int cmd_verify(const Config& c, std::ostream& out) {
  auto L = load_ideal(c.vars, c.ideal);
  auto w = ext_weight(c, weight_text(c, L));
  if (c.point.empty()) throw UsageError("missing --point");
  auto mode = parse_mode(c.mode);
  std::vector<ValuedSeries> point;
  for (const auto& s : split(c.point, ";")) point.push_back(parse_series(trim(s), mode));
  auto rep = verify_lift(local_ideal(L), point, w, parse_value(c.N));
  ordered_json vok = rep.valuation_ok, rok = rep.residual_ok;
  emit(c, out,
       {{"achieved", texts(rep.achieved)},
        {"valuation_ok", vok},
        {"residuals", texts(rep.residuals)},
        {"residual_ok", rok},
        {"pass", rep.pass}});
  return rep.pass ? 0 : 1;
}

int cmd_np_solve(const Config& c, std::ostream& out) {
  if (c.coeffs.empty()) throw UsageError("missing --coeffs");
  auto mode = parse_mode(c.mode);
  std::vector<ValuedSeries> F;
  for (const auto& s : split(c.coeffs, ";")) F.push_back(parse_series(trim(s), mode));
  NumberField field;
  auto roots = newton_puiseux(F, parse_value(c.N), field, mode);
  emit(c, out, {{"roots", series_texts(roots)}, {"field", field.describe()}});
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local tropicalization and series lifting over k[[x]]", "ltrop"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* s, bool weight) {
    s->add_option("--vars", c.vars, "variables, e.g. x,y,z");
    s->add_option("--ideal", c.ideal, "generators separated by ';' or '@file'");
    if (weight) s->add_option("--w", c.w, "weight, e.g. 2,3 or 1,sqrt(2)");
    s->add_option("--d", c.d, "square-root parameter expected in weights");
    s->add_option("--seed", c.seed, "seed for point and weight searches");
    s->add_flag("--json", c.json, "one JSON object per line");
  };
  auto series_opts = [&](CLI::App* s) {
    s->add_option("--N", c.N, "target truncation");
    s->add_option("--mode", c.mode, "puiseux or hahn")->check(CLI::IsMember({"puiseux", "hahn"}));
  };
  std::vector<std::pair<CLI::App*, int (*)(const Config&, std::ostream&)>> cmds;
  auto add = [&](const char* name, const char* help, int (*fn)(const Config&, std::ostream&)) {
    auto* s = app.add_subcommand(name, help);
    cmds.emplace_back(s, fn);
    return s;
  };
  common(add("init-form", "initial form and w-order of each generator", cmd_init_form), true);
  common(add("init-ideal", "initial ideal of the ideal at w", cmd_init_ideal), true);
  auto* cv = add("coset-val", "pushforward valuation of polynomials modulo the ideal", cmd_coset_val);
  common(cv, true);
  cv->add_option("--g", c.g, "polynomial (repeatable)");
  common(add("cone", "Groebner cone of w", cmd_cone), true);
  auto* tm = add("trop-member", "membership in the local tropical variety", cmd_trop_member);
  common(tm, true);
  tm->add_option("--queries", c.queries, "weights separated by ';' or '@file' with one per line");
  common(add("trop-hyper", "local tropical hypersurface of one polynomial", cmd_trop_hyper), false);
  auto* te = add("trop-enum", "bounded traversal of the Groebner fan", cmd_trop_enum);
  common(te, false);
  te->add_option("--budget", c.budget, "maximum number of cones");
  auto* tn = add("tensor", "weighted tensor product of two ideals", cmd_tensor);
  common(tn, true);
  tn->add_option("--vars2", c.vars2, "variables of the second factor");
  tn->add_option("--ideal2", c.ideal2, "generators of the second factor");
  tn->add_option("--w2", c.w2, "weight of the second factor");
  auto* lf = add("lift", "lift a tropical point to series", cmd_lift);
  common(lf, true);
  series_opts(lf);
  auto* vf = add("verify", "check a series point against the ideal", cmd_verify);
  common(vf, true);
  series_opts(vf);
  vf->add_option("--point", c.point, "coordinates separated by ';'");
  auto* np = add("np-solve", "Newton-Puiseux roots of a polynomial with series coefficients", cmd_np_solve);
  np->add_option("--coeffs", c.coeffs, "coefficients from degree 0 upward, separated by ';'");
  series_opts(np);
  np->add_flag("--json", c.json, "one JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    for (auto& [s, fn] : cmds)
      if (s->parsed()) return fn(c, out);
    return 2;
  } catch (const NegativeResult& e) {
    err << "negative: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }
