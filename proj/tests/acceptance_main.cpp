// Release acceptance harness. Each criterion below is a self-contained
// property check against the bundled fixture worlds and prints exactly one
// PASS/FAIL line. Tolerances and time budgets are pinned in this file on
// purpose: loosening one is a release decision, not a test fix.
//
// Usage: acceptance <source-dir>

#include "nscc/climate.hpp"
#include "nscc/config.hpp"
#include "nscc/economy.hpp"
#include "nscc/engine.hpp"
#include "nscc/errors.hpp"
#include "nscc/impacts.hpp"
#include "nscc/reporting.hpp"

#include "json.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nscc;
namespace fs = std::filesystem;

namespace {

std::string g_source_dir;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel_diff(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Fixture worlds are loaded once and shared; criteria copy the config before
// overriding anything.
struct FixtureWorld {
    RunConfig cfg;
    ModelInputs inputs;
};

const FixtureWorld& fixture_world(const std::string& name) {
    static std::map<std::string, FixtureWorld> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        FixtureWorld world;
        world.cfg = load_run_config(g_source_dir + "/data/" + name + "/config.json");
        world.inputs = load_model_inputs(world.cfg);
        it = cache.emplace(name, std::move(world)).first;
    }
    return it->second;
}

// Baseline and pulsed runs for one config; the pulse lands in eval_year.
struct PulsePair {
    Trajectory baseline;
    Trajectory pulsed;
    PulseSpec pulse;
};

PulsePair run_pulse_pair(const FixtureWorld& world, const RunConfig& cfg, int eval_year,
                         double size_gtc) {
    PulsePair out;
    out.pulse = PulseSpec{eval_year, cfg.pulse_gas, size_gtc};
    const WorldParams params = world_params_from(cfg, world.inputs);
    out.baseline = run_world(world.inputs.countries, world.inputs.scenario, cfg, params);
    out.pulsed =
        run_world(world.inputs.countries, world.inputs.scenario, cfg, params, &out.pulse);
    return out;
}

// ---------------------------------------------------------------------------
// 1. Every aggregate damage form matches an independently coded closed form.

std::string criterion_damage_forms() {
    const double a1 = 0.013;
    const double a2 = 4.2e-5;
    const double a3 = 0.021;
    const double beta = 1.75;

    auto make = [](DamageForm form, double x1, double x2, double x3, double b) {
        DamageFunctionSpec spec;
        spec.form = form;
        spec.alpha1 = x1;
        spec.alpha2 = x2;
        spec.alpha3 = x3;
        spec.beta = b;
        return spec;
    };

    struct Probe {
        DamageFunctionSpec spec;
        std::function<double(double)> oracle;
    };
    // The continuity constraint for the two-branch linear form fixes its
    // intercept at (a1 - a3) * beta.
    const double tol_intercept = (a1 - a3) * beta;
    const std::vector<Probe> probes = {
        {make(DamageForm::TolParabolic, a1, a2, 0, 0),
         [=](double t) { return a1 * t + a2 * t * t; }},
        {make(DamageForm::Weitzman6, a1, a2, 0, 0),
         [=](double t) { return a1 * t * t + a2 * std::pow(t, 6.0); }},
        {make(DamageForm::Weitzman7, a1, a2, 0, 0),
         [=](double t) { return a1 * t * t + a2 * std::pow(t, 7.0); }},
        {make(DamageForm::NewboldMarten, a1, 0, 0, beta),
         [=](double t) { return t < beta ? 0.0 : a1 * (t - beta); }},
        {make(DamageForm::Nordhaus, a1, 0, 0, 0), [=](double t) { return a1 * t * t; }},
        {make(DamageForm::Hope, a1, 0, 0, 0), [=](double t) { return a1 * t; }},
        {make(DamageForm::VdpWithagen, a1, 0, 0, 0),
         [=](double t) { return a1 * (std::exp(t) - 1.0); }},
        {make(DamageForm::TolLinear, a1, tol_intercept, a3, beta),
         [=](double t) { return t <= beta ? a1 * t : tol_intercept + a3 * t; }},
        {make(DamageForm::BarrageNordhaus, a1, 0, 0, 0), [=](double t) { return a1 * t * t; }},
        {make(DamageForm::HowardSterner, a1, 0, 0, 0), [=](double t) { return a1 * t * t; }},
        {make(DamageForm::Weitzman2012, a1, a2, 0, 0),
         [=](double t) { return a1 * t * t + a2 * std::pow(t, kWeitzman2012Exponent); }},
        {make(DamageForm::NordhausYang, a1, 0, 0, 0), [=](double t) { return a1 * t * t; }},
    };
    require(probes.size() == kDamageFormCount, "probe table does not cover every form");

    const double warmings[] = {0.0, 1.0, 2.5, 4.0};
    double max_rel = 0.0;
    for (const Probe& probe : probes) {
        probe.spec.validate();
        for (double t : warmings) {
            const double got = aggregate_damage_function(probe.spec, t);
            const double want = probe.oracle(t);
            const std::string where =
                std::string(damage_form_name(probe.spec.form)) + " at T=" + num(t);
            if (want == 0.0) {
                require(got == 0.0, where + " is " + num(got) + ", expected exactly 0");
            } else {
                const double rel = std::abs(got - want) / std::abs(want);
                max_rel = std::max(max_rel, rel);
                require(rel <= 1e-12, where + " off by " + num(rel) + " relative");
            }
        }
    }

    // Hockey-stick form: exactly zero below the threshold, linear above it.
    const DamageFunctionSpec kink = make(DamageForm::NewboldMarten, a1, 0, 0, beta);
    for (double t : {0.0, 0.5, 1.0, beta - 1e-9, beta}) {
        require(aggregate_damage_function(kink, t) == 0.0,
                "newbold_marten nonzero at T=" + num(t));
    }
    require(std::abs(aggregate_damage_function(kink, 2.5) - a1 * (2.5 - beta)) <= 1e-14,
            "newbold_marten wrong above the threshold");

    // Two-branch linear form: continuous across the kink.
    const DamageFunctionSpec branch = make(DamageForm::TolLinear, a1, tol_intercept, a3, beta);
    const double below = aggregate_damage_function(branch, beta - 1e-9);
    const double above = aggregate_damage_function(branch, beta + 1e-9);
    require(std::abs(above - below) <= 1e-10,
            "tol_linear jumps by " + num(above - below) + " at the kink");
    require(std::abs(aggregate_damage_function(branch, beta) - a1 * beta) <= 1e-14,
            "tol_linear wrong at the kink itself");

    return "12 forms x 4 warmings, max rel err " + num(max_rel);
}

// ---------------------------------------------------------------------------
// 2. Calibration pins every regional benchmark at 2.5 C and the national
//    decomposition genuinely differs from a one-country-per-region collapse
//    at any other warming (checked at 2.0 C).

CountryRecord collapse_region(const CountryTable& table, const std::string& region) {
    CountryRecord agg;
    agg.iso_code = region;
    agg.name = region + " (collapsed)";
    agg.region_id = region;
    double pop_weighted_urban = 0.0;
    double gdp_weighted_pattern = 0.0;
    double gdp_weighted_temp = 0.0;
    for (const CountryRecord& rec : table.records()) {
        if (rec.region_id != region) continue;
        agg.base_population += rec.base_population;
        agg.base_gdp += rec.base_gdp;
        agg.coast_length += rec.coast_length;
        agg.wetland_area += rec.wetland_area;
        agg.dryland_area += rec.dryland_area;
        pop_weighted_urban += rec.base_population * rec.urban_share;
        gdp_weighted_pattern += rec.base_gdp * rec.temperature_pattern;
        gdp_weighted_temp += rec.base_gdp * rec.base_temperature;
    }
    require(agg.base_population > 0, "empty region " + region);
    agg.urban_share = pop_weighted_urban / agg.base_population;
    agg.temperature_pattern = gdp_weighted_pattern / agg.base_gdp;
    agg.base_temperature = gdp_weighted_temp / agg.base_gdp;
    return agg;
}

std::string criterion_calibration() {
    const FixtureWorld& toy = fixture_world("toy");
    require(toy.inputs.has_calibration, "toy fixture has no benchmarks");

    std::vector<std::string> regions;
    for (const CountryRecord& rec : toy.inputs.countries.records()) {
        if (std::find(regions.begin(), regions.end(), rec.region_id) == regions.end()) {
            regions.push_back(rec.region_id);
        }
    }
    std::sort(regions.begin(), regions.end());
    const RegionalBenchmarks benchmarks = load_benchmarks(toy.cfg.benchmarks_path, regions);

    auto sector_sum = [&](double warming, const CountryTable& table, const CalibratedImpacts& cal,
                          const std::string& region, Sector sector) {
        double sum = 0.0;
        for (const CountryRecord& rec : table.records()) {
            if (rec.region_id != region) continue;
            const ImpactInputs ref = reference_inputs(warming, rec, toy.cfg.climate);
            sum += sector_impact(sector, ref, rec,
                                 cal.for_country(rec.iso_code)[static_cast<size_t>(sector)]);
        }
        return sum;
    };

    // National sums reproduce every benchmark at the calibration warming.
    double max_residual = 0.0;
    for (const std::string& region : regions) {
        for (size_t s = 0; s < kSectorCount; ++s) {
            const double sum = sector_sum(kCalibrationWarming, toy.inputs.countries,
                                          toy.inputs.impacts, region, static_cast<Sector>(s));
            const double bench = benchmarks.by_region.at(region)[s];
            const double residual = rel_diff(sum, bench);
            max_residual = std::max(max_residual, residual);
            require(residual <= 1e-6, region + "/" + sector_name(static_cast<Sector>(s)) +
                                          " misses its benchmark by " + num(residual));
        }
    }

    // Collapse each region to one synthetic country and recalibrate it to the
    // same benchmarks; totals must agree at 2.5 C and split apart at 2.0 C.
    CountryTable collapsed;
    for (const std::string& region : regions) {
        collapsed.add(collapse_region(toy.inputs.countries, region));
    }
    const CalibratedImpacts regional = calibrate_national_params(
        benchmarks, collapsed, toy.cfg.sector_defaults, toy.cfg.climate);

    auto total = [&](double warming, const CountryTable& table, const CalibratedImpacts& cal,
                     const std::string& region) {
        double sum = 0.0;
        for (size_t s = 0; s < kSectorCount; ++s) {
            sum += sector_sum(warming, table, cal, region, static_cast<Sector>(s));
        }
        return sum;
    };

    double min_gap = std::numeric_limits<double>::infinity();
    for (const std::string& region : regions) {
        const double nat_25 = total(kCalibrationWarming, toy.inputs.countries, toy.inputs.impacts,
                                    region);
        const double reg_25 = total(kCalibrationWarming, collapsed, regional, region);
        require(rel_diff(nat_25, reg_25) <= 1e-9,
                region + ": totals disagree at the calibration warming");

        const double nat_20 = total(2.0, toy.inputs.countries, toy.inputs.impacts, region);
        const double reg_20 = total(2.0, collapsed, regional, region);
        const double gap = rel_diff(nat_20, reg_20);
        min_gap = std::min(min_gap, gap);
        require(gap > 1e-6,
                region + ": national and collapsed totals coincide at 2.0 C (gap " + num(gap) +
                    ")");
    }

    return "max benchmark residual " + num(max_residual) + ", min 2.0 C divergence " +
           num(min_gap);
}

// ---------------------------------------------------------------------------
// 3. Summed national values collapse to the single-region SCC exactly on a
//    homogeneous world with linear damages, and split by more than 1% on the
//    heterogeneous toy world with convex damages.

std::string criterion_aggregation() {
    const FixtureWorld& homog = fixture_world("homog");
    const int homog_eval = homog.cfg.eval_years.front();
    const PulsePair hp = run_pulse_pair(homog, homog.cfg, homog_eval, homog.cfg.pulse_size_gtc);
    const NsccVector homog_per = nscc_all_countries(hp.baseline, hp.pulsed, homog.inputs.countries,
                                                    homog.cfg, homog.cfg.preferences, hp.pulse,
                                                    homog_eval);
    const double homog_sum = homog_per.sum();
    const double homog_single =
        global_scc_single_region(homog.inputs, homog.cfg, homog.cfg.preferences, homog_eval);
    const double homog_rel = std::abs(homog_single - homog_sum) / std::abs(homog_sum);
    require(homog_rel < 1e-9, "homogeneous collapse off by " + num(homog_rel) + " relative");

    const FixtureWorld& toy = fixture_world("toy");
    RunConfig cfg = toy.cfg;
    cfg.damage_model.kind = DamageModelKind::Aggregate;
    cfg.damage_model.form = DamageForm::Nordhaus;
    const PreferenceParams prefs{0.03, 1.0};
    const int eval = cfg.eval_years.front();
    const PulsePair tp = run_pulse_pair(toy, cfg, eval, cfg.pulse_size_gtc);
    const NsccVector toy_per =
        nscc_all_countries(tp.baseline, tp.pulsed, toy.inputs.countries, cfg, prefs, tp.pulse,
                           eval);
    const double toy_sum = toy_per.sum();
    const double toy_single = global_scc_single_region(toy.inputs, cfg, prefs, eval);
    const double toy_gap = std::abs(toy_single - toy_sum) / std::abs(toy_sum);
    require(toy_gap > 0.01, "heterogeneous gap only " + num(toy_gap) + " of the summed value");

    return "homogeneous rel diff " + num(homog_rel) + ", heterogeneous gap " +
           num(100.0 * toy_gap) + "%";
}

// ---------------------------------------------------------------------------
// 4. With lognormal climate sensitivity and convex damages, the Monte Carlo
//    mean exceeds the deterministic value (Jensen), and a bootstrap on the
//    draws confirms the excess is not sampling noise.

std::string criterion_uncertainty_premium() {
    const FixtureWorld& toy = fixture_world("toy");
    RunConfig cfg = toy.cfg;
    cfg.damage_model.kind = DamageModelKind::Aggregate;
    cfg.damage_model.form = DamageForm::Nordhaus; // convex in warming
    cfg.uncertainty.draw_count = 500;
    cfg.uncertainty.alpha_relative_sd = 0.0;      // climate sensitivity only
    cfg.uncertainty.population_growth_sd = 0.0;
    const PreferenceParams prefs{0.03, 1.0};
    const int eval = cfg.eval_years.front();

    const MonteCarloResult mc = monte_carlo_scc(toy.inputs, cfg, prefs, eval);
    require(mc.failed_draws == 0, num(mc.failed_draws) + " draws failed");

    std::mt19937_64 rng(987654321);
    const int resamples = 4000;
    size_t positive = 0;
    double min_excess = std::numeric_limits<double>::infinity();
    double max_p = 0.0;
    for (size_t i = 0; i < mc.isos.size(); ++i) {
        const double det = mc.deterministic[i];
        if (det <= 0.0) continue;
        ++positive;
        require(mc.mean[i] > det, mc.isos[i] + ": mean " + num(mc.mean[i]) +
                                      " not above deterministic " + num(det));
        min_excess = std::min(min_excess, mc.mean[i] / det - 1.0);

        // Two-sided percentile bootstrap of the mean against H0: mean == det.
        const std::vector<double>& draws = mc.draws[i];
        require(!draws.empty(), mc.isos[i] + ": no successful draws");
        std::uniform_int_distribution<size_t> pick(0, draws.size() - 1);
        int le = 0;
        int ge = 0;
        for (int b = 0; b < resamples; ++b) {
            double mean = 0.0;
            for (size_t k = 0; k < draws.size(); ++k) mean += draws[pick(rng)];
            mean /= static_cast<double>(draws.size());
            if (mean <= det) ++le;
            if (mean >= det) ++ge;
        }
        const double p = std::min(1.0, 2.0 * std::min((le + 1.0) / (resamples + 1.0),
                                                      (ge + 1.0) / (resamples + 1.0)));
        max_p = std::max(max_p, p);
        require(p < 0.05, mc.isos[i] + ": bootstrap p = " + num(p));
    }
    require(positive >= 1, "no damage-positive countries in the toy world");

    return num(positive) + " countries, min premium " + num(100.0 * min_excess) + "%, max p " +
           num(max_p);
}

// ---------------------------------------------------------------------------
// 5. Lower discounting raises every damage-positive national value:
//    (0.01, 1) > (0.03, 1) > (0.03, 2) country by country.

std::string criterion_preference_monotonicity() {
    const FixtureWorld& toy = fixture_world("toy");
    const int eval = toy.cfg.eval_years.front();
    const PulsePair pp = run_pulse_pair(toy, toy.cfg, eval, toy.cfg.pulse_size_gtc);

    auto values = [&](double prtp, double rra) {
        const PreferenceParams prefs{prtp, rra};
        return nscc_all_countries(pp.baseline, pp.pulsed, toy.inputs.countries, toy.cfg, prefs,
                                  pp.pulse, eval);
    };
    const NsccVector patient = values(0.01, 1.0);
    const NsccVector base = values(0.03, 1.0);
    const NsccVector curved = values(0.03, 2.0);

    size_t checked = 0;
    for (size_t i = 0; i < base.values.size(); ++i) {
        if (base.values[i] <= 0.0) continue;
        ++checked;
        const std::string& iso = toy.inputs.countries.records()[i].iso_code;
        require(patient.values[i] > base.values[i],
                iso + ": value did not rise when prtp fell to 0.01");
        require(base.values[i] > curved.values[i],
                iso + ": value did not fall when rra rose to 2");
    }
    require(checked >= 1, "no damage-positive countries in the toy world");
    return num(checked) + " countries strictly ordered across the preference grid";
}

// ---------------------------------------------------------------------------
// 6. Lowering the damage-valuation elasticity from 0 to -0.36 shifts the
//    global sum toward below-average-income countries.

std::string criterion_elasticity_direction() {
    const FixtureWorld& toy = fixture_world("toy");
    const int eval = toy.cfg.eval_years.front();
    const PreferenceParams prefs{0.03, 1.0};
    const PulsePair pp = run_pulse_pair(toy, toy.cfg, eval, toy.cfg.pulse_size_gtc);

    auto values = [&](double epsilon) {
        RunConfig cfg = toy.cfg;
        cfg.income_elasticity = epsilon;
        return nscc_all_countries(pp.baseline, pp.pulsed, toy.inputs.countries, cfg, prefs,
                                  pp.pulse, eval);
    };
    const NsccVector neutral = values(0.0);
    const NsccVector tilted = values(-0.36);

    const double world_income = toy.inputs.countries.world_income_per_capita();
    double below_neutral = 0.0;
    double above_neutral = 0.0;
    double below_tilted = 0.0;
    double above_tilted = 0.0;
    size_t n_below = 0;
    size_t n_above = 0;
    for (size_t i = 0; i < neutral.values.size(); ++i) {
        const CountryRecord& rec = toy.inputs.countries.records()[i];
        if (rec.base_income_per_capita() < world_income) {
            ++n_below;
            below_neutral += neutral.values[i];
            below_tilted += tilted.values[i];
        } else {
            ++n_above;
            above_neutral += neutral.values[i];
            above_tilted += tilted.values[i];
        }
    }
    require(n_below >= 1 && n_above >= 1, "toy world lacks countries on both sides of the mean");

    // Absolute contributions move in opposite directions...
    require(below_tilted > below_neutral, "below-average contribution did not rise");
    require(above_tilted < above_neutral, "above-average contribution did not fall");
    // ...and so do the shares of the global sum.
    const double share_neutral = below_neutral / (below_neutral + above_neutral);
    const double share_tilted = below_tilted / (below_tilted + above_tilted);
    require(share_tilted > share_neutral, "below-average share did not rise");

    return "below-average share " + num(share_neutral) + " -> " + num(share_tilted);
}

// ---------------------------------------------------------------------------
// 7. The carbon cycle matches its impulse-response closed form and is linear:
//    two pulses superpose on any background path.

std::string criterion_carbon_cycle() {
    const ClimateParams params;

    // Airborne fraction of a unit pulse after n years.
    ClimateState state;
    state.co2_ppm = params.carbon.preindustrial_ppm;
    state = step_carbon_cycle(state, params, 1.0);
    double max_rel = 0.0;
    int n = 1;
    for (int target : {1, 10, 100, 1000}) {
        while (n < target) {
            state = step_carbon_cycle(state, params, 0.0);
            ++n;
        }
        double airborne = 0.0;
        for (double mass : state.box_masses) airborne += mass;
        double want = 0.0;
        for (size_t b = 0; b < kCarbonBoxes; ++b) {
            want += params.carbon.shares[b] * std::exp(-target / params.carbon.lifetimes[b]);
        }
        const double rel = std::abs(airborne - want) / want;
        max_rel = std::max(max_rel, rel);
        require(rel <= 1e-9,
                "airborne fraction after " + std::to_string(target) + " yr off by " + num(rel));
    }

    // Superposition on a loaded background: response(A+B) = response(A) + response(B).
    const ClimateState start = initial_climate_state(params, 410.0, 722.0, 270.0, 0.0, 1.1);
    auto run = [&](const std::map<int, double>& pulses) {
        std::vector<double> ppm;
        ClimateState s = start;
        for (int t = 0; t < 30; ++t) {
            double emissions = 8.0;
            const auto it = pulses.find(t);
            if (it != pulses.end()) emissions += it->second;
            s = step_carbon_cycle(s, params, emissions);
            ppm.push_back(s.co2_ppm);
        }
        return ppm;
    };
    const std::vector<double> both = run({{3, 5.0}, {17, 3.0}});
    const std::vector<double> first = run({{3, 5.0}});
    const std::vector<double> second = run({{17, 3.0}});
    const std::vector<double> background = run({});
    double max_abs = 0.0;
    for (size_t t = 0; t < both.size(); ++t) {
        const double combined = both[t] - background[t];
        const double summed = (first[t] - background[t]) + (second[t] - background[t]);
        max_abs = std::max(max_abs, std::abs(combined - summed));
    }
    require(max_abs <= 1e-10, "superposition violated by " + num(max_abs) + " ppm");

    return "max airborne rel err " + num(max_rel) + ", max superposition err " + num(max_abs) +
           " ppm";
}

// ---------------------------------------------------------------------------
// 8. Per-tonne values are insensitive to the pulse size: 1 MtC and 10 MtC
//    pulses agree within 1% for every country.

std::string criterion_pulse_linearity() {
    const FixtureWorld& toy = fixture_world("toy");
    const int eval = toy.cfg.eval_years.front();
    const PreferenceParams prefs{0.03, 1.0};

    const PulsePair small = run_pulse_pair(toy, toy.cfg, eval, 0.001);
    const PulsePair big = run_pulse_pair(toy, toy.cfg, eval, 0.01);
    const NsccVector v_small = nscc_all_countries(small.baseline, small.pulsed,
                                                  toy.inputs.countries, toy.cfg, prefs,
                                                  small.pulse, eval);
    const NsccVector v_big = nscc_all_countries(big.baseline, big.pulsed, toy.inputs.countries,
                                                toy.cfg, prefs, big.pulse, eval);

    size_t compared = 0;
    double max_rel = 0.0;
    for (size_t i = 0; i < v_small.values.size(); ++i) {
        if (std::abs(v_small.values[i]) <= 1e-12) continue;
        ++compared;
        const double rel = std::abs(v_big.values[i] - v_small.values[i]) /
                           std::abs(v_small.values[i]);
        max_rel = std::max(max_rel, rel);
        require(rel <= 0.01, toy.inputs.countries.records()[i].iso_code +
                                 ": pulse sizes disagree by " + num(100.0 * rel) + "%");
    }
    require(compared >= 1, "every toy value is zero");
    return num(compared) + " countries, max pulse-size gap " + num(100.0 * max_rel) + "%";
}

// ---------------------------------------------------------------------------
// 9. Boundary behavior on the divergent world: runaway per-draw values sit at
//    exactly +/-200 and the population/income floors hold in every state row.

std::string criterion_boundaries() {
    const FixtureWorld& divergent = fixture_world("divergent");
    const RunConfig& cfg = divergent.cfg;
    const int eval = cfg.eval_years.front();

    const MonteCarloResult mc = monte_carlo_scc(divergent.inputs, cfg, cfg.preferences, eval);
    require(mc.total_clamps > 0, "no draw ever hit the clamp");
    size_t at_upper = 0;
    size_t at_lower = 0;
    for (size_t i = 0; i < mc.isos.size(); ++i) {
        bool all_upper = !mc.draws[i].empty();
        bool all_lower = all_upper;
        for (double v : mc.draws[i]) {
            require(std::abs(v) <= kNsccClampUsd,
                    mc.isos[i] + ": draw " + num(v) + " escaped the clamp band");
            all_upper = all_upper && v == kNsccClampUsd;
            all_lower = all_lower && v == -kNsccClampUsd;
        }
        if (all_upper) ++at_upper;
        if (all_lower) ++at_lower;
    }
    require(at_upper >= 1, "no country pinned at exactly +200");
    require(at_lower >= 1, "no country pinned at exactly -200");

    int floor_events = 0;
    const WorldParams params = world_params_from(cfg, divergent.inputs);
    const Trajectory traj =
        run_world(divergent.inputs.countries, divergent.inputs.scenario, cfg, params, nullptr,
                  [&](const std::string&, int, const std::string&) { ++floor_events; });
    require(floor_events > 0, "the divergent world never engaged a floor");
    for (size_t c = 0; c < traj.isos.size(); ++c) {
        for (const CountryState& s : traj.states[c]) {
            require(s.population >= kPopulationFloor,
                    traj.isos[c] + " population " + num(s.population) + " below the floor in " +
                        std::to_string(s.year));
            require(s.per_capita_income >= kIncomeFloorPerCapita,
                    traj.isos[c] + " income " + num(s.per_capita_income) +
                        " below the floor in " + std::to_string(s.year));
        }
    }

    return num(at_upper) + " country at +200, " + num(at_lower) + " at -200, " +
           num(floor_events) + " floor events, floors never pierced";
}

// ---------------------------------------------------------------------------
// 10. Determinism: worker count never changes the bytes of the Monte Carlo
//     CSVs, and a new seed changes the manifest hash.

std::string criterion_determinism() {
    const FixtureWorld& toy = fixture_world("toy");
    const fs::path root = fs::temp_directory_path() /
                          ("nscc_acceptance_" + std::to_string(::getpid()));
    const fs::path dir_serial = root / "serial";
    const fs::path dir_parallel = root / "parallel";
    fs::create_directories(dir_serial);
    fs::create_directories(dir_parallel);

    RunConfig cfg = toy.cfg;
    cfg.threads = 1;
    cfg.output_dir = dir_serial.string();
    cmd_montecarlo(cfg);
    cfg.threads = 4;
    cfg.output_dir = dir_parallel.string();
    cmd_montecarlo(cfg);

    for (int year : cfg.eval_years) {
        const std::string name = "montecarlo_" + std::to_string(year) + ".csv";
        const std::string serial = read_bytes(dir_serial / name);
        const std::string parallel = read_bytes(dir_parallel / name);
        require(!serial.empty(), name + " is empty");
        require(serial == parallel, name + " differs between 1 and 4 workers");
    }

    auto manifest_hash = [](const fs::path& dir) {
        const nlohmann::json manifest = nlohmann::json::parse(read_bytes(dir /
                                                                         "run_manifest.json"));
        return manifest.at("config_hash").get<std::string>();
    };
    const std::string hash_before = manifest_hash(dir_parallel);
    cfg.uncertainty.master_seed += 1;
    cmd_montecarlo(cfg); // same directory, new seed
    const std::string hash_after = manifest_hash(dir_parallel);
    require(hash_before != hash_after, "seed change left the manifest hash at " + hash_before);

    return "CSV bytes identical across workers; seed flip moved the hash";
}

// ---------------------------------------------------------------------------
// 11. Growth core: convergence to the closed-form steady state and an exact
//     consumption + investment = net output split everywhere.

std::string criterion_economy() {
    EconomyParams params;
    params.capital_share = 0.3;
    params.depreciation = 0.08;
    params.initial_capital_to_output = 3.0;
    const double labor = 3.0e6;
    const double savings = 0.22;

    CountryState state = initial_country_state(2019, labor, 1.0e10, params);
    const double tfp = state.tfp;
    const EconomyDrivers drivers{labor, 0.0, savings};
    for (int step = 0; step < 2000; ++step) {
        CountryState next = step_economy(state, params, drivers, 0.0, "SOL");
        require(rel_diff(state.consumption + state.investment, state.net_output) <= 1e-12,
                "identity broken in step " + std::to_string(step));
        state = next;
    }
    const double gamma = params.capital_share;
    const double steady_capital = std::pow(
        savings * tfp * std::pow(labor, 1.0 - gamma) / params.depreciation, 1.0 / (1.0 - gamma));
    const double rel = std::abs(state.capital - steady_capital) / steady_capital;
    require(rel <= 1e-9, "capital " + num(rel) + " away from the steady state after 2000 steps");

    // The same identity must hold for every country-year of a full world run.
    const FixtureWorld& toy = fixture_world("toy");
    const WorldParams world = world_params_from(toy.cfg, toy.inputs);
    const Trajectory traj = run_world(toy.inputs.countries, toy.inputs.scenario, toy.cfg, world);
    double max_gap = 0.0;
    for (size_t c = 0; c < traj.isos.size(); ++c) {
        for (const CountryState& s : traj.states[c]) {
            const double gap = rel_diff(s.consumption + s.investment, s.net_output);
            max_gap = std::max(max_gap, gap);
            require(gap <= 1e-12, traj.isos[c] + " " + std::to_string(s.year) +
                                      ": identity off by " + num(gap));
        }
    }

    return "steady-state rel err " + num(rel) + ", max identity gap " + num(max_gap);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <source-dir>\n");
        return 2;
    }
    g_source_dir = argv[1];

    struct Item {
        int id;
        const char* label;
        double budget_seconds; // 0 = no explicit budget
        std::string (*body)();
    };
    const std::vector<Item> items = {
        {1, "damage forms match independent closed-form oracles", 1.0, criterion_damage_forms},
        {2, "calibration pins benchmarks at 2.5 C and diverges at 2.0 C", 5.0,
         criterion_calibration},
        {3, "national sums collapse exactly when homogeneous, split when not", 30.0,
         criterion_aggregation},
        {4, "climate-sensitivity uncertainty raises the mean value", 300.0,
         criterion_uncertainty_premium},
        {5, "values fall monotonically in prtp and rra", 60.0,
         criterion_preference_monotonicity},
        {6, "negative valuation elasticity tilts the sum toward poor countries", 60.0,
         criterion_elasticity_direction},
        {7, "carbon cycle matches its impulse response and superposes", 1.0,
         criterion_carbon_cycle},
        {8, "per-tonne values are pulse-size invariant within 1%", 60.0,
         criterion_pulse_linearity},
        {9, "per-draw clamp sits exactly at +/-200 and floors hold", 0.0, criterion_boundaries},
        {10, "byte-identical output across workers; seed moves the hash", 0.0,
         criterion_determinism},
        {11, "Solow steady state and the accounting identity", 0.0, criterion_economy},
    };

    int failures = 0;
    for (const Item& item : items) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            detail = item.body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && item.budget_seconds > 0.0 && seconds > item.budget_seconds) {
            ok = false;
            detail = "over the " + num(item.budget_seconds) + " s budget";
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s (%.2fs) %s [%s]\n", item.id, ok ? "PASS" : "FAIL", seconds,
                    item.label, detail.c_str());
        std::fflush(stdout);
    }

    std::printf("acceptance: %zu/%zu criteria passed\n", items.size() - failures, items.size());
    return failures == 0 ? 0 : 1;
}
