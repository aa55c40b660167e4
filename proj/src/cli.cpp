#include "quadcrucial/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadcrucial/classifier.hpp"
#include "quadcrucial/crucial.hpp"
#include "quadcrucial/errors.hpp"
#include "quadcrucial/invariants.hpp"
#include "quadcrucial/parser.hpp"
#include "quadcrucial/profile.hpp"
#include "quadcrucial/quadmap.hpp"
#include "quadcrucial/reduction.hpp"

namespace quadcrucial::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxSweepAxis = 100000;

struct Options {
  std::uint64_t p = 0;
  std::string map;
  bool json = false;
  std::vector<std::string> centers;
  std::string rexp = "0";
  std::string form;
  std::string l1;
  std::string l2;
};

std::string str(const Rat& x) { return x.get_str(); }

std::string str(const ResidueElem& x) { return std::to_string(x.value()); }

// ---- human-readable tables -------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string line;
      for (const auto& e : j) line += (line.empty() ? "" : " ") + (e.is_string() ? e.get<std::string>() : e.dump());
      rows.emplace_back(prefix, line.empty() ? "(none)" : line);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_null()) {
    rows.emplace_back(prefix, "-");
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.json) {
    out << j.dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) {
    if (r.first != "schema") width = std::max(width, r.first.size());
  }
  for (const auto& [k, v] : rows) {
    if (k == "schema") continue;
    out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
}

// ---- field builders --------------------------------------------------------

void put_stratum(Json& j, const ReductionType& t) {
  j["stratum"] = to_string(t.tag);
  if (t.x_tilde) j["x_tilde"] = str(*t.x_tilde);
}

Json residue_json(const std::optional<ResidueClass>& c) {
  if (!c) return nullptr;
  Json j;
  j["kind"] = to_string(c->kind);
  if (c->x_tilde) j["x_tilde"] = str(*c->x_tilde);
  return j;
}

Json point_json(const TypeIIPoint& xi) { return Json{{"center", str(xi.center)}, {"rexp", str(xi.radius_exp)}}; }

Json head() { return Json{{"schema", 1}}; }

// ---- commands --------------------------------------------------------------

Lift need_map(const Options& o) {
  if (o.map.empty()) throw InputError("--map is required for this command");
  return parse_map(o.map);
}

Rat single_center(const Options& o) {
  if (o.centers.size() > 1) throw InputError("this command takes a single --center");
  return o.centers.empty() ? Rat(0) : parse_rat(o.centers.front());
}

Json cmd_classify(const Options& o) {
  const PrimeCtx ctx(o.p);
  const SigmaInvariants s = sigma_invariants(need_map(o));
  Json j = head();
  put_stratum(j, stratum(s, ctx));
  j["sigma1"] = str(s.sigma1);
  j["sigma2"] = str(s.sigma2);
  j["sigma3"] = str(s.sigma3);
  return j;
}

Json cmd_invariants(const Options& o) {
  const PrimeCtx ctx(o.p);
  const Lift lift = need_map(o);
  const SigmaInvariants s = sigma_invariants(lift);
  Json j = head();
  j["sigma1"] = str(s.sigma1);
  j["sigma2"] = str(s.sigma2);
  j["sigma3"] = str(s.sigma3);
  Json poly = Json::array();
  for (const Rat& c : multiplier_polynomial(lift)) poly.push_back(str(c));
  j["multiplier_polynomial"] = poly;
  Json vals = Json::array();
  bool repelling = false;
  for (const Valuation& v : multiplier_valuations(s, ctx)) {
    vals.push_back(v.to_string());
    repelling = repelling || v < Valuation(0L);
  }
  j["multiplier_valuations"] = vals;
  j["repelling_fixed_point"] = repelling;
  j["res_valuation"] = vp(resultant(lift), ctx).to_string();
  return j;
}

Json cmd_ordres(const Options& o) {
  const PrimeCtx ctx(o.p);
  const Lift lift = need_map(o);
  const TypeIIPoint at{single_center(o), parse_rat(o.rexp)};
  Json j = head();
  j["center"] = str(at.center);
  j["rexp"] = str(at.radius_exp);
  if (at.has_integral_radius()) {
    const OrdResPaths paths = ord_res_paths(lift, at, ctx);
    if (paths.direct != paths.transformed) {
      throw InternalConsistency("ordRes paths disagree: " + str(paths.direct) + " vs " + str(paths.transformed));
    }
    j["ord_res"] = str(paths.direct);
    j["source"] = "resultant";
  } else {
    j["ord_res"] = str(ord_res_profile(lift, at.center, ctx)(at.radius_exp));
    j["source"] = "profile";
  }
  return j;
}

Json cmd_profile(const Options& o) {
  const PrimeCtx ctx(o.p);
  const Rat center = single_center(o);
  const PLFunction f = ord_res_profile(need_map(o), center, ctx);
  Json j = head();
  j["center"] = str(center);
  Json bps = Json::array();
  for (const Rat& b : f.breakpoints()) bps.push_back(str(b));
  j["breakpoints"] = bps;
  Json pieces = Json::array();
  for (const AffinePiece& piece : f.pieces()) {
    pieces.push_back(Json{{"slope", str(piece.slope)}, {"intercept", str(piece.intercept)}});
  }
  j["pieces"] = pieces;
  const Minimizer m = minimize_profile(f);
  j["argmin"] = Json{{"lo", str(m.lo)}, {"hi", str(m.hi)}};
  j["min"] = str(m.value);
  return j;
}

Json cmd_reduce_at(const Options& o) {
  const PrimeCtx ctx(o.p);
  const TypeIIPoint at{single_center(o), parse_rat(o.rexp)};
  const ResidueMap r = reduce_at(need_map(o), at, ctx);
  Json j = head();
  j["center"] = str(at.center);
  j["rexp"] = str(at.radius_exp);
  j["degree"] = r.degree;
  Json f = Json::array(), g = Json::array();
  for (const auto& c : r.f) f.push_back(str(c));
  for (const auto& c : r.g) g.push_back(str(c));
  j["f"] = f;
  j["g"] = g;
  j["residue_class"] = residue_json(classify_residue(r));
  return j;
}

Json cmd_find_crucial(const Options& o) {
  const PrimeCtx ctx(o.p);
  const Lift lift = need_map(o);
  Json j = head();
  if (o.centers.empty()) {
    const auto form = recognize_normal_form(lift);
    if (!form) throw InputError("map is not in a normal form; pass --center to search a line of discs");
    const CrucialReport r = predict_xi(*form, ctx);
    j["xi"] = point_json(r.xi);
    put_stratum(j, r.stratum);
    j["residue_class"] = residue_json(r.residue_class);
    if (!r.unavailable_reason.empty()) j["residue_unavailable"] = r.unavailable_reason;
    j["min_ord_res"] = str(r.min_ord_res);
    j["method"] = "normal form";
    return j;
  }
  const Rat center = single_center(o);
  const Minimizer m = find_crucial_on_segment(lift, center, ctx);
  j["center"] = str(center);
  j["argmin"] = Json{{"lo", str(m.lo)}, {"hi", str(m.hi)}};
  j["unique"] = m.is_point();
  j["min_ord_res"] = str(m.value);
  j["method"] = "segment";
  return j;
}

void put_report(Json& j, const ConsistencyReport& r) {
  j["consistent"] = true;
  j["xi"] = point_json(r.xi);
  put_stratum(j, r.stratum);
  j["residue_class"] = residue_json(r.residue_class);
  j["min_ord_res"] = str(r.min_ord_res);
  j["unique"] = r.unique;
  j["method"] = r.method;
}

std::vector<Rat> centers_of(const Options& o) {
  std::vector<Rat> out;
  for (const auto& c : o.centers) out.push_back(parse_rat(c));
  return out;
}

Json cmd_verify(const Options& o) {
  const PrimeCtx ctx(o.p);
  Json j = head();
  put_report(j, verify_consistency(need_map(o), ctx, centers_of(o)));
  return j;
}

// Returns the exit code; ConsistencyFailure per instance is recorded, not thrown.
int cmd_sweep(const Options& o, std::ostream& out) {
  const PrimeCtx ctx(o.p);
  if (o.form != "A" && o.form != "B") throw InputError("--form must be A or B");
  if (o.l1.empty()) throw InputError("--l1 is required");
  const std::vector<Rat> xs = expand_range(o.l1);
  std::vector<Rat> ys;
  if (o.form == "B") {
    if (o.l2.empty()) throw InputError("--l2 is required for form B");
    ys = expand_range(o.l2);
  } else if (!o.l2.empty()) {
    throw InputError("form A has a single parameter; drop --l2");
  }
  if (xs.size() * std::max<std::size_t>(ys.size(), 1) > kMaxSweepAxis) throw InputError("sweep too large");

  Json j = head();
  j["form"] = o.form;
  j["p"] = o.p;
  Json instances = Json::array();
  std::size_t ok = 0, bad = 0, skipped = 0;

  auto run_one = [&](Json row, const NormalForm& form) {
    try {
      put_report(row, verify_consistency(normal_form_lift(form), ctx));
      ++ok;
    } catch (const ConsistencyFailure& e) {
      row["consistent"] = false;
      row["diagnostic"] = e.what();
      ++bad;
    } catch (const InputError& e) {
      row["skipped"] = e.what();
      ++skipped;
    }
    instances.push_back(std::move(row));
  };

  for (const Rat& x : xs) {
    if (o.form == "A") {
      run_one(Json{{"s", str(x)}}, MultipleFixedForm{x});
      continue;
    }
    for (const Rat& y : ys) run_one(Json{{"l1", str(x)}, {"l2", str(y)}}, DistinctFixedForm{x, y});
  }
  j["instances"] = instances;
  j["summary"] = Json{{"total", ok + bad + skipped}, {"consistent", ok}, {"inconsistent", bad}, {"skipped", skipped}};
  emit(j, o, out);
  return bad == 0 ? kOk : kConsistencyFailure;
}

}  // namespace

std::vector<Rat> expand_range(const std::string& text) {
  std::vector<Rat> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    const Rat lo = parse_rat(text.substr(0, c1));
    const Rat hi = parse_rat(text.substr(c1 + 1, c2 - c1 - 1));
    const Rat step = parse_rat(text.substr(c2 + 1));
    if (step <= 0) throw InputError("range step must be positive");
    if (hi < lo) throw InputError("empty range '" + text + "'");
    for (Rat x = lo; x <= hi; x += step) {
      if (out.size() >= kMaxSweepAxis) throw InputError("range '" + text + "' has too many values");
      out.push_back(x);
    }
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      out.push_back(parse_rat(item));
    }
    if (out.empty()) throw InputError("empty parameter list");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction strata and crucial points of quadratic maps over Q_p"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-p", o.p, "prime")->required();
    sub->add_flag("--json", o.json, "emit JSON");
  };
  auto with_map = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--map", o.map, "rational map in z, e.g. \"z + 1/5 + 1/z\"")->required();
  };
  auto with_point = [&](CLI::App* sub) {
    sub->add_option("--center", o.centers, "disc centre (rational)")->expected(1);
    sub->add_option("--rexp", o.rexp, "radius exponent m, radius p^-m");
  };

  with_map(app.add_subcommand("classify", "stratum W1-W4 from the multiplier invariants"));
  with_map(app.add_subcommand("invariants", "sigma invariants and multiplier valuations"));
  auto* ordres = app.add_subcommand("ordres", "ordRes at a type II point");
  with_map(ordres);
  with_point(ordres);
  auto* profile = app.add_subcommand("profile", "ordRes along the discs around a centre");
  with_map(profile);
  profile->add_option("--center", o.centers, "disc centre (rational)")->expected(1);
  auto* reduce = app.add_subcommand("reduce-at", "residue map at a type II point");
  with_map(reduce);
  with_point(reduce);
  auto* find = app.add_subcommand("find-crucial", "locate the crucial point");
  with_map(find);
  find->add_option("--center", o.centers, "search this line of discs instead of using a normal form")->expected(1);
  auto* verify = app.add_subcommand("verify", "cross-check stratum, crucial point and residue class");
  with_map(verify);
  verify->add_option("--center", o.centers, "centres to search (repeatable) for maps not in normal form");
  auto* sweep = app.add_subcommand("sweep", "verify a grid of normal-form maps");
  common(sweep);
  sweep->add_option("--form", o.form, "A: z + s + 1/z, B: (z^2 + l1 z)/(l2 z + 1)")->required();
  sweep->add_option("--l1", o.l1, "s (form A) or l1 (form B): a:b:step or a,b,c")->required();
  sweep->add_option("--l2", o.l2, "l2 (form B)");

  std::vector<const char*> argv{"qcrucial"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "sweep") return cmd_sweep(o, out);
    Json j;
    if (cmd == "classify") j = cmd_classify(o);
    else if (cmd == "invariants") j = cmd_invariants(o);
    else if (cmd == "ordres") j = cmd_ordres(o);
    else if (cmd == "profile") j = cmd_profile(o);
    else if (cmd == "reduce-at") j = cmd_reduce_at(o);
    else if (cmd == "find-crucial") j = cmd_find_crucial(o);
    else if (cmd == "verify") j = cmd_verify(o);
    emit(j, o, out);
    return kOk;
  } catch (const ConsistencyFailure& e) {
    Json j = head();
    j["consistent"] = false;
    j["diagnostic"] = e.what();
    emit(j, o, out);
    err << e.what();
    return kConsistencyFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalConsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kConsistencyFailure;
  }
}

}  // namespace quadcrucial::cli
