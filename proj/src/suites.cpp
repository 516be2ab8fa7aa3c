#include "starconf/suites.hpp"

#include <algorithm>
#include <functional>

#include "starconf/certificates.hpp"
#include "starconf/hadamard.hpp"
#include "starconf/linalg.hpp"
#include "starconf/polygon.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

Range Range::parse(std::string_view text) {
  auto number = [&](std::string_view part) -> unsigned {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error("malformed range '" + std::string(text) + "'");
    return static_cast<unsigned>(std::stoul(std::string(part)));
  };
  const auto dots = text.find("..");
  Range out;
  if (dots == std::string_view::npos) {
    out.lo = out.hi = number(text);
  } else {
    out.lo = number(text.substr(0, dots));
    out.hi = number(text.substr(dots + 2));
  }
  if (out.lo > out.hi) throw Error("empty range '" + std::string(text) + "'");
  return out;
}

bool SuiteReport::pass() const {
  return !trials.empty() && std::all_of(trials.begin(), trials.end(), [](const TrialRecord& t) { return t.pass; });
}

Json SuiteReport::to_json() const {
  Json out;
  out["suite"] = id;
  out["seed"] = seed;
  std::size_t passed = 0;
  Json list = Json::array();
  for (const auto& t : trials) {
    passed += t.pass ? 1 : 0;
    Json j;
    j["index"] = t.index;
    j["seed"] = t.seed;
    j["instance"] = t.instance;
    j["checks"] = t.checks;
    if (!t.error.empty()) j["error"] = t.error;
    j["pass"] = t.pass;
    list.push_back(std::move(j));
  }
  out["trials"] = std::move(list);
  out["summary"] = {{"trials", trials.size()}, {"passed", passed}};
  out["verdict"] = pass() ? "PASS" : "FAIL";
  for (std::size_t i = 0; i < trials.size(); ++i)
    if (!trials[i].pass) {
      out["first_failure"] = out["trials"][i];
      break;
    }
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"thm2.1",  "thm3.1b", "thm3.1d", "thm3.1e", "lem3.6",
                                               "thm4.2",  "prop4.4", "thm4.5",  "lem4.1",  "prop5.1",
                                               "cor5.2",  "prop5.3", "brianchon", "prop6.3"};
  return ids;
}

bool is_suite_id(std::string_view id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

RNC random_rnc(Rng& rng, unsigned n) { return RNC(random_invertible(rng, n + 1, 5)); }

ProjPoint random_point(Rng& rng, std::size_t n, long bound) {
  std::vector<Integer> c(n + 1);
  for (;;) {
    bool nonzero = false;
    for (auto& v : c) {
      v = rng.uniform(-bound, bound);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return ProjPoint(std::span<const Integer>(c));
  }
}

std::vector<ProjPoint> random_general_points(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<ProjPoint> out;
  while (out.size() < count) {
    ProjPoint p = random_point(rng, n);
    if (std::find(out.begin(), out.end(), p) != out.end()) continue;
    bool ok = true;
    if (n == 2)
      for (std::size_t i = 0; i < out.size() && ok; ++i)
        for (std::size_t j = i + 1; j < out.size() && ok; ++j) {
          const ProjPoint three[] = {out[i], out[j], p};
          ok = !collinear(three);
        }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

namespace {

using TrialFn = std::function<void(Rng&, const Json&, TrialRecord&)>;

bool all_checks(const Json& checks) {
  for (const auto& [k, v] : checks.items())
    if (!v.get<bool>()) return false;
  return true;
}

SuiteReport execute(std::string_view id, const SuiteOptions& opt, const std::vector<Json>& cases,
                    std::size_t default_trials, const TrialFn& fn) {
  const std::size_t per_case = opt.trials ? opt.trials : default_trials;
  std::vector<Json> tasks;
  for (const auto& c : cases)
    for (std::size_t k = 0; k < per_case; ++k) tasks.push_back(c);

  SuiteReport report;
  report.id = std::string(id);
  report.seed = opt.seed;
  report.trials.resize(tasks.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    TrialRecord& rec = report.trials[i];
    rec.index = i;
    rec.seed = mix_seed(opt.seed, i);
    for (int attempt = 0; attempt < 5; ++attempt) {
      Rng rng(attempt == 0 ? rec.seed : mix_seed(rec.seed, attempt));
      rec.instance = tasks[i];
      if (attempt > 0) rec.instance["resample"] = attempt;
      rec.checks = Json::object();
      rec.error.clear();
      try {
        fn(rng, tasks[i], rec);
        break;
      } catch (const DegenerateConfiguration& e) {
        rec.error = std::string("degenerate: ") + e.what();
      } catch (const std::exception& e) {
        rec.error = e.what();
        break;
      }
    }
    rec.pass = rec.error.empty() && all_checks(rec.checks);
  }
  return report;
}

Range get(const std::optional<Range>& r, unsigned lo, unsigned hi) { return r ? *r : Range{lo, hi}; }

Json params_json(std::span<const Param> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

PointSet star_on(const RNC& curve, std::span<const Param> ps) {
  return contact_star(curve, std::vector<Param>(ps.begin(), ps.end())).points;
}

/// Replace one point of x by a random point not already in it.
PointSet perturb_one(Rng& rng, const PointSet& x) {
  const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(x.size()) - 1));
  PointSet out = x.without(x.points()[k]);
  for (;;) {
    ProjPoint p = random_point(rng, x.ambient_dim());
    if (out.insert(p)) return out;
  }
}

// h-vector of `count` general points of P^n: H(d) = min(C(n+d, n), count).
HVector generic_points_hvector(std::size_t n, std::size_t count) {
  std::vector<std::uint64_t> h;
  std::uint64_t prev = 0;
  for (unsigned d = 0; prev < count; ++d) {
    const std::uint64_t value = std::min<std::uint64_t>(binomial_u64(static_cast<unsigned>(n) + d, d), count);
    h.push_back(value - prev);
    prev = value;
  }
  return HVector(std::move(h));
}

std::vector<Hyperplane> random_lines(Rng& rng, std::size_t count) {
  for (;;) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < count; ++i) {
      const ProjPoint p = random_point(rng, 2, 20);
      hs.emplace_back(std::span<const Integer>(p.coords()));
    }
    if (meets_properly(hs)) return hs;
  }
}

// ---- Hadamard construction -------------------------------------------------

LineParam random_avoiding_line(Rng& rng, unsigned n) {
  for (;;) {
    const ProjPoint p = random_point(rng, n, 9), q = random_point(rng, n, 9);
    if (p == q) continue;
    LineParam line(p, q);
    if (n < 2 || line_avoids_delta(line, n - 2)) return line;
  }
}

void trial_thm21(Rng& rng, const Json& params, TrialRecord& rec) {
  const unsigned n = params.at("n").get<unsigned>();
  const LineParam line = random_avoiding_line(rng, n);
  rec.instance["line"] = {to_json(line.p()), to_json(line.q())};

  const auto power = coordinate_power_line(line, n);
  rec.checks["is_rnc"] = power.is_rnc;
  const RNC curve(power.forms);

  // n distinct points of the line with no zero coordinate.
  std::vector<std::pair<Integer, Integer>> ab;
  std::vector<ProjPoint> pts;
  while (pts.size() < n) {
    const Integer a = rng.uniform(-20, 20), b = rng.uniform(-20, 20);
    if (a == 0 && b == 0) continue;
    const ProjPoint p = line.point_at(a, b);
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    if (std::any_of(p.coords().begin(), p.coords().end(), [](const Integer& c) { return c == 0; })) continue;
    ab.emplace_back(a, b);
    pts.push_back(p);
  }
  Json pj = Json::array();
  for (const auto& p : pts) pj.push_back(to_json(p));
  rec.instance["points"] = pj;

  bool flats = true;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Integer t[] = {ab[k].first, ab[k].second};
    const Param param{std::span<const Integer>(t)};
    for (unsigned d = 0; d + 1 <= n; ++d) {
      auto had = osculating_flat_hadamard(pts[k], line, d);
      auto der = osculating_flat(curve, param, d);
      const auto rh = span_rank<PointTag>(had), rd = span_rank<PointTag>(der);
      had.insert(had.end(), der.begin(), der.end());
      flats = flats && rh == d + 1 && rd == d + 1 && span_rank<PointTag>(had) == d + 1;
    }
  }
  rec.checks["osculating_flats"] = flats;

  const Hyperplane lpow = had_power_hyperplane(line);
  std::vector<Hyperplane> osc;
  bool hyperplane_formula = true;
  for (const auto& p : pts) {
    const Hyperplane h = join_points(osculating_flat_hadamard(p, line, n - 1));
    hyperplane_formula = hyperplane_formula && h == had_point_hyperplane(p, lpow);
    osc.push_back(h);
  }
  rec.checks["hyperplane_formula"] = hyperplane_formula;
  const ProjPoint prod = had_product(pts);
  const ProjPoint meet_pt = intersect_hyperplanes(osc);
  rec.instance["product"] = to_json(prod);
  rec.checks["intersection_identity"] = prod == meet_pt;

  // Control: a line on which two coordinate forms coincide meets Delta_(n-2)
  // and its n-th coordinate-wise power is degenerate.
  std::vector<Integer> pc = line.p().coords(), qc = line.q().coords();
  pc[1] = pc[0];
  qc[1] = qc[0];
  const ProjPoint cp(std::span<const Integer>{pc}), cq(std::span<const Integer>{qc});
  if (!(cp == cq)) rec.checks["control_degenerate_line_not_rnc"] = !coordinate_power_line(LineParam(cp, cq), n).is_rnc;
}

// ---- Complete intersections of two contact stars ---------------------------

void trial_thm31_ci(Rng& rng, const Json& params, TrialRecord& rec, bool equal) {
  const unsigned r = params.at("r").get<unsigned>();
  const unsigned s = equal ? r : r - 1;
  const RNC curve = random_rnc(rng, 2);
  const auto ps = random_params(rng, r + s);
  const std::span<const Param> all(ps);
  rec.instance["s"] = s;
  rec.instance["conic_forms"] = to_json(curve.forms());
  rec.instance["params_x"] = params_json(all.first(r));
  rec.instance["params_y"] = params_json(all.subspan(r));
  const PointSet u = star_on(curve, all.first(r)).united(star_on(curve, all.subspan(r)));
  const CIType ct(r - 1, s);
  const HVector h = h_vector(u);
  rec.instance["h"] = h.to_string();
  rec.checks["h_vector_ci"] = h == ci_hvector(ct);
  const auto cert = ci_certificate(u, ct);
  rec.instance["certificate"] = to_json(cert);
  rec.checks["certificate"] = cert.verified;

  // Control: moving one point off the configuration must break the
  // certificate. Four points in general position are always CI(2,2), so the
  // control starts at r = 4 when s = r - 1.
  if (equal || r >= 4) {
    const PointSet bad = perturb_one(rng, u);
    bool fails = true;
    try {
      fails = !verify_certificate(bad, ci_certificate(bad, ct));
    } catch (const DegenerateConfiguration&) {
      throw;
    } catch (const Error&) {
      fails = true;
    }
    rec.checks["control_perturbed_not_ci"] = fails;
  }
}

void trial_thm31d(Rng& rng, const Json& params, TrialRecord& rec, unsigned line_index) {
  const unsigned r = params.at("r").get<unsigned>();
  const RNC curve = random_rnc(rng, 2);
  const auto ps = random_params(rng, 2 * r);
  const std::span<const Param> all(ps);
  rec.instance["params_x"] = params_json(all.first(r));
  rec.instance["params_y"] = params_json(all.subspan(r));
  const auto x = contact_star(curve, std::vector<Param>(all.begin(), all.begin() + r));
  const auto y = contact_star(curve, std::vector<Param>(all.begin() + r, all.end()));
  const std::size_t li = (line_index == 0 ? r : line_index) - 1;
  if (li >= r) throw Error("line index out of range");
  rec.instance["line_index"] = li + 1;
  PointSet z(2);
  for (const auto& p : y.points)
    if (incident(p, y.hyperplanes[li])) z.insert(p);
  rec.checks["z_has_r_minus_1_points"] = z.size() == r - 1;
  const auto slice_xy = ideal_slice(x.points.united(y.points), r - 1);
  const auto slice_xz = ideal_slice(x.points.united(z), r - 1);
  rec.instance["slice_dim"] = slice_xy.size();
  rec.checks["slice_nonempty"] = !slice_xy.empty();
  rec.checks["slice_equal"] = same_span(slice_xy, slice_xz);
  // Control: dropping a point of Z leaves too few conditions.
  const PointSet z2 = z.without(z.points().front());
  rec.checks["control_smaller_z_differs"] = !same_span(slice_xy, ideal_slice(x.points.united(z2), r - 1));
}

void trial_lem36(Rng& rng, const Json& params, TrialRecord& rec) {
  const unsigned r = params.at("r").get<unsigned>();
  unsigned s = params.contains("s") ? params.at("s").get<unsigned>() : 0;
  if (s == 0) s = static_cast<unsigned>(rng.uniform(2, r - 2));
  if (r < s + 2) throw Error("lem3.6 needs r > s + 1");
  rec.instance["s"] = s;
  const RNC curve = random_rnc(rng, 2);
  const auto ps = random_params(rng, r + s);
  const std::span<const Param> all(ps);
  rec.instance["params_x"] = params_json(all.first(r));
  rec.instance["params_y"] = params_json(all.subspan(r));
  const PointSet u = star_on(curve, all.first(r)).united(star_on(curve, all.subspan(r)));
  const std::size_t total = u.size();
  rec.instance["h"] = h_vector(u).to_string();
  Json types = Json::array();
  bool all_refuted = true;
  for (unsigned a = 1; static_cast<std::size_t>(a) * a <= total; ++a) {
    if (total % a) continue;
    const CIType ct(a, static_cast<unsigned>(total / a));
    types.push_back({ct.a, ct.b});
    all_refuted = all_refuted && ci_refutation(u, ct);
  }
  rec.instance["candidate_types"] = types;
  rec.checks["all_types_refuted"] = all_refuted;
  // Control: with s = r - 1 the union is a complete intersection and the
  // refutation must not fire.
  const auto more = random_params(rng, r - 1, 20, all.first(r));
  const PointSet ci = star_on(curve, all.first(r)).united(star_on(curve, more));
  rec.checks["control_ci_not_refuted"] = !ci_refutation(ci, CIType(r - 1, r - 1));
}

// ---- Hilbert functions -----------------------------------------------------

void trial_thm42(Rng& rng, const Json& params, TrialRecord& rec) {
  const unsigned r = params.at("r").get<unsigned>(), s = params.at("s").get<unsigned>();
  const RNC curve = random_rnc(rng, 2);
  const auto ps = random_params(rng, r + s);
  const std::span<const Param> all(ps);
  rec.instance["params_x"] = params_json(all.first(r));
  rec.instance["params_y"] = params_json(all.subspan(r));
  const PointSet x = star_on(curve, all.first(r));
  const HVector h = h_vector(x.united(star_on(curve, all.subspan(r))));
  const HVector expected = two_fat_hvector(r - 1, s - 1);
  rec.instance["h"] = h.to_string();
  rec.instance["expected"] = expected.to_string();
  rec.checks["h_equals_two_fat_formula"] = h == expected;
  const auto pts = random_general_points(rng, 2, 2);
  FatScheme z(2);
  z.add(pts[0], r - 1);
  if (s > 1) z.add(pts[1], s - 1);
  rec.checks["h_equals_two_fat_scheme"] = h == h_vector(z);
  if (s >= 3) {
    // Control: a star on random lines in place of the contact star.
    const PointSet y = star_configuration(random_lines(rng, s));
    rec.checks["control_generic_star_differs"] = h_vector(x.united(y)) != expected;
  }
}

void trial_prop44(Rng& rng, const Json& params, TrialRecord& rec) {
  std::vector<unsigned> m = params.at("m").get<std::vector<unsigned>>();
  const auto pts = random_general_points(rng, 2, 3);
  FatScheme z(2);
  for (std::size_t i = 0; i < 3; ++i) z.add(pts[i], m[i]);
  rec.instance["points"] = {to_json(pts[0]), to_json(pts[1]), to_json(pts[2])};
  const auto table = hilbert_table(z);
  bool agree = true;
  for (unsigned d = 0; d <= table.values.size(); ++d) {
    const auto computed = d < table.values.size() ? table.values[d] : table.values.back();
    agree = agree && computed == three_fat_hilbert(m, d);
  }
  rec.instance["h"] = table.h.to_string();
  rec.checks["recursion_matches_rank"] = agree;
  rec.checks["degree"] = table.h.degree() == z.degree();

  // Control: the recursion assumes the points are not collinear.
  std::vector<Integer> c(3);
  const Integer k = rng.uniform_nonzero(-5, 5);
  for (std::size_t i = 0; i < 3; ++i) c[i] = pts[0][i] + k * pts[1][i];
  FatScheme line(2);
  line.add(pts[0], m[0]);
  line.add(pts[1], m[1]);
  line.add(ProjPoint(std::span<const Integer>(c)), m[2]);
  const auto collinear_table = hilbert_table(line);
  bool differs = false;
  for (unsigned d = 0; d < collinear_table.values.size(); ++d)
    differs = differs || collinear_table.values[d] != three_fat_hilbert(m, d);
  rec.checks["control_collinear_differs"] = differs;
}

void trial_thm45(Rng& rng, const Json& params, TrialRecord& rec) {
  const unsigned r = params.at("r").get<unsigned>(), s = params.at("s").get<unsigned>(),
                 t = params.at("t").get<unsigned>();
  const RNC curve = random_rnc(rng, 2);
  const auto ps = random_params(rng, t + r + s);
  const std::span<const Param> all(ps);
  rec.instance["params_w"] = params_json(all.first(t));
  rec.instance["params_x"] = params_json(all.subspan(t, r));
  rec.instance["params_y"] = params_json(all.subspan(t + r));
  const PointSet wx = star_on(curve, all.first(t)).united(star_on(curve, all.subspan(t, r)));
  const HVector h = h_vector(wx.united(star_on(curve, all.subspan(t + r))));
  const HVector closed = three_fat_3had_hvector(r, s, t);
  const auto pts = random_general_points(rng, 2, 3);
  FatScheme z(2);
  z.add(pts[0], t - 1);
  z.add(pts[1], r - 1);
  z.add(pts[2], s - 1);
  const HVector fat = h_vector(z);
  rec.instance["h"] = h.to_string();
  rec.instance["expected"] = closed.to_string();
  rec.checks["union_equals_closed_form"] = h == closed;
  rec.checks["fat_points_equal_closed_form"] = fat == closed;
  rec.checks["recursion_equals_closed_form"] = three_fat_hvector({t - 1, r - 1, s - 1}) == closed;
  if (s >= 3) {
    const PointSet y = star_configuration(random_lines(rng, s));
    rec.checks["control_generic_star_differs"] = h_vector(wx.united(y)) != closed;
  }
}

void trial_lem41(Rng& rng, const Json& params, TrialRecord& rec) {
  const unsigned s = params.at("s").get<unsigned>(), t = params.at("t").get<unsigned>();
  const auto lines = random_lines(rng, s + t);
  Json lj = Json::array();
  for (const auto& l : lines) lj.push_back(to_json(l));
  rec.instance["lines"] = lj;
  const PointSet all = star_configuration(lines);
  const PointSet sub = star_configuration(std::span<const Hyperplane>(lines).first(s));
  const PointSet diff = all.minus(sub);
  const HVector h = h_vector(diff);
  rec.instance["h"] = h.to_string();
  rec.checks["h_equals_formula"] = h == star_difference_hvector(s, t);
  // Control only where the formula differs from the h-vector of general
  // points (for s = 2 they coincide).
  if (star_difference_hvector(s, t) != generic_points_hvector(2, diff.size()))
    rec.checks["control_perturbed_differs"] = h_vector(perturb_one(rng, diff)) != star_difference_hvector(s, t);
}

// ---- Polygons --------------------------------------------------------------

std::vector<ProjPoint> perturb_vertex(Rng& rng, std::vector<ProjPoint> v, std::size_t k) {
  for (;;) {
    ProjPoint p = random_point(rng, 2);
    if (std::find(v.begin(), v.end(), p) == v.end()) {
      v[k] = std::move(p);
      return v;
    }
  }
}

Json points_json(std::span<const ProjPoint> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

void trial_prop51(Rng& rng, const Json&, TrialRecord& rec) {
  const auto ps = random_params(rng, 8);
  rec.instance["params"] = params_json(ps);
  const auto a = circumscribed_polygon(ps);
  rec.instance["vertices"] = points_json(a);
  rec.checks["residual_collinear"] = octagon_residual_collinearity(a);
  rec.checks["control_perturbed_fails"] = !octagon_residual_collinearity(perturb_vertex(rng, a, 3));
}

void trial_cor52(Rng& rng, const Json&, TrialRecord& rec) {
  const auto ps = random_params(rng, 8);
  rec.instance["params"] = params_json(ps);
  const auto a = circumscribed_polygon(ps);
  rec.instance["vertices"] = points_json(a);
  const auto res = octagon_pencil_check(a);
  rec.instance["rank"] = res.rank;
  rec.checks["pencil_rank_at_most_3"] = res.verdict;
  bool member = false;
  if (res.common) {
    rec.instance["common_conic"] = to_json(*res.common);
    // The common member lies in both pencils.
    const auto c = octagon_conics(a);
    RatMatrix m1, m2;
    for (const HomForm* f : {&c.g1, &c.g3, &*res.common}) m1.append_row(f->coefficient_vector());
    for (const HomForm* f : {&c.g2, &c.g4, &*res.common}) m2.append_row(f->coefficient_vector());
    member = rank(m1) == 2 && rank(m2) == 2;
  }
  rec.checks["common_conic_recovered"] = member;
  rec.checks["control_perturbed_fails"] = !octagon_pencil_check(perturb_vertex(rng, a, 0)).verdict;
}

Json concurrency_json(const ConcurrencyResult& r) {
  Json sub = Json::array();
  for (bool b : r.sub_verdicts) sub.push_back(b);
  return sub;
}

void trial_prop53(Rng& rng, const Json&, TrialRecord& rec) {
  const RNC curve = RNC::standard(2);
  const auto ps = random_params(rng, 9);
  const std::span<const Param> all(ps);
  rec.instance["params"] = params_json(ps);
  const PointSet x1 = star_on(curve, all.first(3)), x2 = star_on(curve, all.subspan(3, 3)),
                 x3 = star_on(curve, all.subspan(6));
  auto conic = [](const PointSet& u) {
    auto c = points_on_common_conic(u);
    if (!c) throw InternalError("two triangle contact stars off a common conic");
    return *c;
  };
  const HomForm g12 = conic(x1.united(x2)), g13 = conic(x1.united(x3)), g23 = conic(x2.united(x3));
  const auto res = three_conics_concurrent(g12, g13, g23, rng.uniform(0, 1 << 30));
  rec.instance["sub_verdicts"] = concurrency_json(res);
  rec.checks["concurrent_unanimous"] =
      std::all_of(res.sub_verdicts.begin(), res.sub_verdicts.end(), [](bool b) { return b; });

  // Control: fit g23 through X2 and two points of X3, one of them moved.
  auto bad3 = perturb_vertex(rng, x3.points(), 0);
  const ProjPoint five[] = {x2.points()[0], x2.points()[1], x2.points()[2], bad3[0], bad3[1]};
  const auto bad = three_conics_concurrent(g12, g13, conic_through_five(five), rng.uniform(0, 1 << 30));
  rec.instance["control_sub_verdicts"] = concurrency_json(bad);
  rec.checks["control_perturbed_fails"] = !bad.verdict;
}

void trial_brianchon(Rng& rng, const Json&, TrialRecord& rec) {
  const auto ps = random_params(rng, 6);
  rec.instance["params"] = params_json(ps);
  const auto v = circumscribed_polygon(ps);
  rec.checks["diagonals_concurrent"] = hexagon_diagonals_concurrent(v);
  rec.checks["control_perturbed_fails"] = !hexagon_diagonals_concurrent(perturb_vertex(rng, v, 0));
}

std::vector<Hyperplane> triangle_sides(std::span<const ProjPoint> t) {
  return {line_through(t[0], t[1]), line_through(t[1], t[2]), line_through(t[0], t[2])};
}

void trial_prop63(Rng& rng, const Json&, TrialRecord& rec) {
  const RNC conic = random_rnc(rng, 2);
  const auto ps = random_params(rng, 6);
  std::vector<ProjPoint> pts;
  for (const auto& t : ps) pts.push_back(rnc_point(conic, t));
  rec.instance["points"] = points_json(pts);
  const PointSet u(2, pts);
  const auto cert = ci_certificate(u, CIType(2, 3));
  rec.checks["ci_2_3"] = cert.verified;
  auto lines = triangle_sides(std::span<const ProjPoint>(pts).first(3));
  const auto more = triangle_sides(std::span<const ProjPoint>(pts).subspan(3));
  lines.insert(lines.end(), more.begin(), more.end());
  if (!meets_properly(lines)) throw DegenerateConfiguration("triangle sides do not meet properly");
  const auto tangent = common_tangent_conic(lines);
  rec.checks["tangent_conic_found"] = tangent.has_value();
  bool all_tangent = tangent.has_value();
  if (tangent) {
    rec.instance["tangent_conic"] = to_json(*tangent);
    for (const auto& l : lines) all_tangent = all_tangent && line_tangent_to_conic(l, *tangent);
  }
  rec.checks["all_six_tangent"] = all_tangent;
  // Control: move one vertex off the conic.
  auto bad = perturb_vertex(rng, pts, 0);
  auto bad_lines = triangle_sides(std::span<const ProjPoint>(bad).first(3));
  bad_lines.insert(bad_lines.end(), more.begin(), more.end());
  rec.checks["control_perturbed_fails"] = !common_tangent_conic(bad_lines).has_value();
}

}  // namespace

SuiteReport run_suite(std::string_view id, const SuiteOptions& opt) {
  std::vector<Json> cases;
  if (id == "thm2.1") {
    const Range n = get(opt.n, 2, 4);
    if (n.lo < 2) throw Error("thm2.1 needs n >= 2");
    for (unsigned k = n.lo; k <= n.hi; ++k) cases.push_back({{"n", k}});
    return execute(id, opt, cases, 25, trial_thm21);
  }
  if (id == "thm3.1b" || id == "thm3.1e") {
    const Range r = get(opt.r, 3, 7);
    if (r.lo < 3) throw Error(std::string(id) + " needs r >= 3");
    for (unsigned k = r.lo; k <= r.hi; ++k) cases.push_back({{"r", k}});
    const bool equal = id == "thm3.1e";
    return execute(id, opt, cases, 10,
                   [equal](Rng& rng, const Json& p, TrialRecord& rec) { trial_thm31_ci(rng, p, rec, equal); });
  }
  if (id == "thm3.1d") {
    const Range r = get(opt.r, 3, 5);
    if (r.lo < 3) throw Error("thm3.1d needs r >= 3");
    for (unsigned k = r.lo; k <= r.hi; ++k) cases.push_back({{"r", k}});
    const unsigned li = opt.line_index;
    return execute(id, opt, cases, 5,
                   [li](Rng& rng, const Json& p, TrialRecord& rec) { trial_thm31d(rng, p, rec, li); });
  }
  if (id == "lem3.6") {
    const Range r = get(opt.r, 4, 8);
    for (unsigned k = r.lo; k <= r.hi; ++k) {
      if (opt.s) {
        for (unsigned s = std::max(opt.s->lo, 2u); s <= opt.s->hi; ++s)
          if (k >= s + 2) cases.push_back({{"r", k}, {"s", s}});
      } else if (k >= 4) {
        cases.push_back({{"r", k}});
      }
    }
    if (cases.empty()) throw Error("lem3.6 needs r > s + 1 and s >= 2");
    // Default: ten random (r, s) pairs spread over the r range.
    const std::size_t per = opt.trials ? opt.trials : std::max<std::size_t>(1, (10 + cases.size() - 1) / cases.size());
    SuiteOptions o = opt;
    o.trials = per;
    return execute(id, o, cases, per, trial_lem36);
  }
  if (id == "thm4.2") {
    const Range r = get(opt.r, 2, 8), s = get(opt.s, 2, 8);
    for (unsigned a = std::max(r.lo, 2u); a <= r.hi; ++a)
      for (unsigned b = std::max(s.lo, 2u); b <= std::min(s.hi, a); ++b) cases.push_back({{"r", a}, {"s", b}});
    if (cases.empty()) throw Error("thm4.2 needs 2 <= s <= r");
    return execute(id, opt, cases, 3, trial_thm42);
  }
  if (id == "prop4.4") {
    const Range m = get(opt.r, 1, 5);
    if (m.lo < 1) throw Error("prop4.4 multiplicities must be positive");
    for (unsigned a = m.lo; a <= m.hi; ++a)
      for (unsigned b = m.lo; b <= a; ++b)
        for (unsigned c = m.lo; c <= b; ++c) cases.push_back({{"m", {a, b, c}}});
    return execute(id, opt, cases, 1, trial_prop44);
  }
  if (id == "thm4.5") {
    const Range r = get(opt.r, 2, 5), s = get(opt.s, 2, 5);
    for (unsigned a = std::max(r.lo, 2u); a <= r.hi; ++a)
      for (unsigned b = std::max(s.lo, 2u); b <= std::min(s.hi, a); ++b)
        for (unsigned t = a + b - 1; t <= a + b + 1; ++t)
          if (!opt.t || (t >= opt.t->lo && t <= opt.t->hi)) cases.push_back({{"r", a}, {"s", b}, {"t", t}});
    if (cases.empty()) throw Error("thm4.5 needs 2 <= s <= r and t in {r+s-1, r+s, r+s+1}");
    return execute(id, opt, cases, 1, trial_thm45);
  }
  if (id == "lem4.1") {
    const Range s = get(opt.s, 2, 4), t = get(opt.t, 1, 4);
    for (unsigned a = std::max(s.lo, 2u); a <= s.hi; ++a)
      for (unsigned b = std::max(t.lo, 1u); b <= t.hi; ++b) cases.push_back({{"s", a}, {"t", b}});
    return execute(id, opt, cases, 2, trial_lem41);
  }
  const Json none = Json::object();
  if (id == "prop5.1") return execute(id, opt, {none}, 20, trial_prop51);
  if (id == "cor5.2") return execute(id, opt, {none}, 20, trial_cor52);
  if (id == "prop5.3") return execute(id, opt, {none}, 20, trial_prop53);
  if (id == "brianchon") return execute(id, opt, {none}, 20, trial_brianchon);
  if (id == "prop6.3") return execute(id, opt, {none}, 10, trial_prop63);
  throw Error("unknown suite '" + std::string(id) + "'");
}

}  // namespace starconf
