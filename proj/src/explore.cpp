#include "starconf/explore.hpp"

#include "starconf/certificates.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

HVector conjectured_two_star_hvector(unsigned n, unsigned r, unsigned s) {
  if (r < s) std::swap(r, s);
  if (n < 1 || s < n) throw Error("conjectured h-vector needs r >= s >= n >= 1");
  std::vector<std::uint64_t> h;
  for (unsigned k = n - 1; k <= r - 1; ++k) h.push_back(binomial_u64(k, n - 1));
  for (unsigned k = s - 1; k + 1 >= n; --k) {
    h.push_back(binomial_u64(k, n - 1));
    if (k == 0) break;
  }
  return HVector(std::move(h));
}

namespace {

struct Sample {
  Json record;
  bool agree = false;
};

Sample conj47_trial(const CampaignConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<unsigned> sizes = cfg.sizes;
  if (sizes.empty()) {
    const Range count = cfg.s.value_or(Range{2, 4});
    const Range size = cfg.r.value_or(Range{2, 5});
    const auto k = static_cast<unsigned>(rng.uniform(count.lo, count.hi));
    for (unsigned i = 0; i < k; ++i) sizes.push_back(static_cast<unsigned>(rng.uniform(size.lo, size.hi)));
  }
  std::size_t total = 0;
  for (auto m : sizes) {
    if (m < 2) throw Error("contact stars in the plane need at least two lines");
    total += m;
  }
  const RNC conic = RNC::standard(2);
  const auto params = random_params(rng, total);
  PointSet stars(2);
  std::size_t at = 0;
  for (auto m : sizes) {
    stars = stars.united(contact_star(conic, std::vector<Param>(params.begin() + at, params.begin() + at + m)).points);
    at += m;
  }
  const auto pts = random_general_points(rng, 2, sizes.size());
  FatScheme fat(2);
  std::vector<unsigned> mults;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    fat.add(pts[i], sizes[i] - 1);
    mults.push_back(sizes[i] - 1);
  }
  const HVector hs = h_vector(stars), hf = h_vector(fat);
  Sample out;
  out.agree = hs == hf;
  out.record["sizes"] = sizes;
  out.record["multiplicities"] = mults;
  out.record["h_stars"] = hs.h;
  out.record["h_fat"] = hf.h;
  out.record["agree"] = out.agree;
  return out;
}

Sample conj61_trial(const CampaignConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const Range nr = cfg.n.value_or(Range{3, 3});
  const auto n = static_cast<unsigned>(rng.uniform(nr.lo, nr.hi));
  if (n < 2) throw Error("conj6.1 needs n >= 2");
  const Range rr = cfg.r.value_or(Range{n, n + 2});
  const auto r = static_cast<unsigned>(rng.uniform(std::max(rr.lo, n), std::max(rr.hi, n)));
  const Range sr = cfg.s.value_or(Range{n, r});
  const auto s = static_cast<unsigned>(rng.uniform(std::max(sr.lo, n), std::max(std::min(sr.hi, r), n)));
  const RNC curve = random_rnc(rng, n);
  const auto params = random_params(rng, r + s);
  const auto x = contact_star(curve, std::vector<Param>(params.begin(), params.begin() + r));
  const auto y = contact_star(curve, std::vector<Param>(params.begin() + r, params.end()));
  const PointSet u = x.points.united(y.points);
  const HVector h = h_vector(u), expected = conjectured_two_star_hvector(n, r, s);
  Sample out;
  out.agree = h == expected;
  out.record["n"] = n;
  out.record["r"] = r;
  out.record["s"] = s;
  out.record["h"] = h.h;
  out.record["conjectured"] = expected.h;
  out.record["agree"] = out.agree;
  if (s + 1 == r || s == r) {
    const bool gor = cb_gorenstein(u);
    out.record["gorenstein"] = gor;
    out.agree = out.agree && gor;
  }
  return out;
}

}  // namespace

Json run_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw Error("a campaign needs at least one trial");
  Sample (*trial)(const CampaignConfig&, std::uint64_t) = nullptr;
  Json sampling;
  if (cfg.conjecture == "conj4.7") {
    trial = conj47_trial;
    sampling = {{"conic", "y^2 - x z"},
                {"tangency_parameters", "[a:b], a, b in [-20, 20]"},
                {"general_points", "coordinates in [-50, 50], no three collinear"}};
  } else if (cfg.conjecture == "conj6.1") {
    trial = conj61_trial;
    sampling = {{"curve", "random forms, coefficients in [-5, 5]"},
                {"tangency_parameters", "[a:b], a, b in [-20, 20]"}};
  } else {
    throw Error("unknown conjecture '" + cfg.conjecture + "'");
  }

  std::vector<Sample> samples(cfg.trials);
  std::vector<std::string> errors(cfg.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    try {
      samples[i] = trial(cfg, mix_seed(cfg.seed, i));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  Json out;
  out["conjecture"] = cfg.conjecture;
  out["seed"] = cfg.seed;
  out["sampling"] = sampling;
  Json trials = Json::array(), mismatches = Json::array();
  std::size_t agreements = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    if (!errors[i].empty()) throw Error("trial " + std::to_string(i) + ": " + errors[i]);
    Json rec;
    rec["index"] = i;
    rec["seed"] = mix_seed(cfg.seed, i);
    for (const auto& [k, v] : samples[i].record.items()) rec[k] = v;
    if (samples[i].agree) {
      ++agreements;
    } else {
      mismatches.push_back(rec);
    }
    trials.push_back(std::move(rec));
  }
  out["trials"] = std::move(trials);
  out["agreements"] = agreements;
  out["mismatches"] = std::move(mismatches);
  return out;
}

}  // namespace starconf
