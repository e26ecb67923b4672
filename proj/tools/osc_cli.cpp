// osc: command-line surface for dictionary generation, verification, and the
// radar / CDMA batch simulations.
//
// Exit codes: 0 success, 1 property violation (failed bound, ambiguous radar
// peak, decode margin breach), 2 usage or parse error, 3 internal
// construction failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "osc/analysis.hpp"
#include "osc/io.hpp"
#include "osc/oscillator.hpp"
#include "osc/sims.hpp"

namespace {

using osc::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;

int default_threads() {
    if (const char* env = std::getenv("OSC_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

struct SystemSpec {
    std::int64_t p = 0;
    std::string system;
};

osc::SignalDictionary build_system(const SystemSpec& spec) {
    osc::PrimeModulus mod(spec.p);
    if (spec.system == "heisenberg") return osc::heisenberg_system(mod);
    if (spec.system == "standard") return osc::standard_basis_system(mod);
    osc::WeilRepresentation rho(mod);
    if (spec.system == "split")
        return osc::build_oscillator_system(rho, osc::enumerate_tori(mod, osc::TorusKind::split),
                                            osc::OscillatorKind::split);
    if (spec.system == "nonsplit")
        return osc::build_oscillator_system(
            rho, osc::enumerate_tori(mod, osc::TorusKind::nonsplit),
            osc::OscillatorKind::nonsplit);
    if (spec.system == "oscillator")
        return osc::build_oscillator_system(rho, osc::enumerate_all_tori(mod),
                                            osc::OscillatorKind::both);
    if (spec.system == "extended") {
        osc::SignalDictionary base = osc::build_oscillator_system(
            rho, osc::enumerate_all_tori(mod), osc::OscillatorKind::both);
        osc::ExtendedSystem ext(std::move(base), mod);
        osc::SignalDictionary dict;
        dict.p = mod.p();
        dict.kind = osc::SystemKind::extended;
        dict.nu = ext.base().nu;
        dict.tori = ext.base().tori;
        for (std::size_t i = 0; i < ext.size(); ++i) dict.signals.push_back(ext.signal(i));
        return dict;
    }
    throw osc::ParseError("unknown system kind: " + spec.system);
}

void write_output(const std::string& path, const json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw osc::Error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw osc::ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw osc::ParseError(path + ": " + e.what());
    }
    return j;
}

int run_generate(const SystemSpec& spec, const std::string& format, std::string out,
                 int threads) {
    osc::SignalDictionary dict = build_system(spec);
    json config = {{"command", "generate"}, {"p", spec.p},      {"system", spec.system},
                   {"format", format},      {"threads", threads}};
    if (out.empty())
        out = "osc-p" + std::to_string(spec.p) + "-" + spec.system +
              (format == "bin" ? ".oscb" : ".json");
    if (format == "bin")
        osc::write_dictionary_binary(out, dict);
    else
        osc::write_dictionary_json(out, dict, config);
    std::cout << "wrote " << dict.size() << " signals to " << out << "\n";
    return kExitPass;
}

osc::CorrelationReport verify_dictionary(const osc::SignalDictionary& dict,
                                         const osc::VerifyOptions& opt,
                                         const std::string& dictionary_id) {
    osc::PrimeModulus mod(dict.p);
    osc::CorrelationReport report;
    report.dictionary_id = dictionary_id;
    report.p = dict.p;
    report.kind = dict.kind;
    // Provenance decides the applicable sections: chirp dictionaries get the
    // exact line-pattern checks, oscillator-style dictionaries get the
    // 2/sqrt(p) / 4/sqrt(p) bound sweeps plus Fourier invariance.
    const bool has_provenance =
        !dict.signals.empty() && dict.signals.front().provenance.type != osc::Provenance::Type::external;
    if (dict.kind == osc::SystemKind::heisenberg && has_provenance) {
        report.heisenberg = osc::verify_heisenberg_properties(dict, mod, opt);
        report.supremum = osc::verify_supremum_and_papr(dict, mod, opt);
        return report;
    }
    report.autocorrelation = osc::verify_autocorrelation(dict, mod, opt);
    report.crosscorrelation = osc::verify_crosscorrelation(dict, mod, opt);
    report.supremum = osc::verify_supremum_and_papr(dict, mod, opt);
    const bool oscillator_kind = dict.kind == osc::SystemKind::oscillator ||
                                 dict.kind == osc::SystemKind::split_oscillator ||
                                 dict.kind == osc::SystemKind::nonsplit_oscillator;
    if (oscillator_kind && has_provenance) {
        osc::WeilRepresentation rho(mod);
        const std::vector<osc::Torus> tori = osc::enumerate_all_tori(mod);
        report.fourier = osc::verify_fourier_invariance(dict, rho, tori, opt);
    }
    return report;
}

int run_verify(const std::string& dict_path, const std::optional<SystemSpec>& spec,
               const osc::VerifyOptions& opt, const std::string& out) {
    osc::SignalDictionary dict;
    std::string id;
    if (!dict_path.empty()) {
        dict = osc::read_dictionary(dict_path);
        id = dict_path;
    } else if (spec) {
        dict = build_system(*spec);
        id = "generated:p" + std::to_string(spec->p) + ":" + spec->system;
    } else {
        throw osc::ParseError("verify needs a dictionary path or --p/--system");
    }
    osc::CorrelationReport report = verify_dictionary(dict, opt, id);
    json j = osc::report_to_json(report);
    j["config"] = {{"command", "verify"},
                   {"dictionary", id},
                   {"tolerance", opt.tolerance},
                   {"pair_budget", opt.pair_budget},
                   {"seed", opt.seed},
                   {"threads", opt.threads}};
    write_output(out, j);
    return report.all_pass() ? kExitPass : kExitViolation;
}

osc::SignalDictionary scenario_dictionary(const json& sc) {
    if (sc.contains("dictionary")) return osc::read_dictionary(sc.at("dictionary"));
    SystemSpec spec;
    spec.p = sc.at("p").get<std::int64_t>();
    spec.system = sc.value("system", "oscillator");
    return build_system(spec);
}

int run_radar(const std::string& scenario_path, const std::string& out, bool strict) {
    json sc = load_json(scenario_path);
    osc::SignalDictionary dict = scenario_dictionary(sc);
    osc::PrimeModulus mod(dict.p);
    json result = {{"command", "radar"}, {"config", sc}};
    int exit_code = kExitPass;

    if (sc.value("all_shifts", false)) {
        // Exhaustive sweep: every (tau, w) true shift against the chosen probe.
        const std::size_t probe_id = sc.value("probe", json::object()).value("signal_id", 0);
        const osc::Signal& probe = dict.signals.at(probe_id);
        std::int64_t recovered = 0, total = 0;
        double worst_gap = 2.0;
        for (std::int64_t tau = 0; tau < dict.p; ++tau)
            for (std::int64_t w = 0; w < dict.p; ++w) {
                osc::RadarScenario rs{probe, osc::HeisenbergElement(tau, w, 0, mod),
                                      sc.value("noise_level", 0.0), sc.value("seed", 0ULL)};
                osc::Signal echo = osc::radar_echo(rs, mod);
                osc::RadarEstimate est = osc::radar_detect(probe, echo, mod);
                ++total;
                if (est.tau == tau && est.w == w) ++recovered;
                worst_gap = std::min(worst_gap, est.peak - est.runner_up);
            }
        result["recovered"] = recovered;
        result["total"] = total;
        result["worst_peak_gap"] = worst_gap;
        if (recovered != total) exit_code = kExitViolation;
    } else {
        const std::size_t probe_id = sc.at("probe").value("signal_id", 0);
        const osc::Signal& probe = dict.signals.at(probe_id);
        const json& shift = sc.at("shift");
        osc::RadarScenario rs{probe,
                              osc::HeisenbergElement(shift.at("tau").get<std::int64_t>(),
                                                     shift.at("w").get<std::int64_t>(), 0, mod),
                              sc.value("noise_level", 0.0), sc.value("seed", 0ULL)};
        osc::Signal echo = osc::radar_echo(rs, mod);
        try {
            osc::RadarEstimate est = osc::radar_detect(probe, echo, mod);
            result["estimate"] = {{"tau", est.tau}, {"w", est.w}};
            result["peak"] = est.peak;
            result["runner_up"] = est.runner_up;
            result["exact"] = est.tau == rs.true_shift.tau && est.w == rs.true_shift.w;
        } catch (const osc::AmbiguousPeak& e) {
            result["error"] = e.what();
            exit_code = strict ? kExitViolation : kExitPass;
        }
    }
    write_output(out, result);
    return exit_code;
}

int run_cdma(const std::string& scenario_path, const std::string& out, bool strict) {
    json sc = load_json(scenario_path);
    osc::SignalDictionary dict = scenario_dictionary(sc);
    osc::PrimeModulus mod(dict.p);
    const int alphabet = sc.value("bit_alphabet", 2);
    json result = {{"command", "cdma"}, {"config", sc}};
    int exit_code = kExitPass;

    if (sc.contains("sweep")) {
        const json& sweep = sc.at("sweep");
        auto rows = osc::cdma_sweep(dict, mod, sweep.at("user_counts").get<std::vector<int>>(),
                                    sweep.value("trials", 100), sc.value("seed", 0ULL), alphabet,
                                    sc.value("noise_level", 0.0));
        result["sweep"] = osc::sweep_to_json(rows);
    } else {
        osc::CdmaScenario scenario;
        scenario.bit_alphabet = alphabet;
        scenario.noise_level = sc.value("noise_level", 0.0);
        scenario.seed = sc.value("seed", 0ULL);
        for (const json& uj : sc.at("users")) {
            osc::CdmaUser user;
            user.signal_id = uj.at("signal_id").get<std::size_t>();
            const double step = 2.0 * std::numbers::pi / alphabet;
            user.bit = std::polar(1.0, step * uj.value("bit", 0.0));
            user.distortion = osc::HeisenbergElement(uj.value("tau", std::int64_t{0}),
                                                     uj.value("w", std::int64_t{0}), 0, mod);
            scenario.users.push_back(user);
        }
        osc::Signal aggregate = osc::cdma_transmit(scenario, dict, mod);
        const osc::CdmaSearch search = sc.value("search", "known-shift") == "full-sweep"
                                           ? osc::CdmaSearch::full_sweep
                                           : osc::CdmaSearch::known_shift;
        json users = json::array();
        for (const auto& user : scenario.users) {
            json uj = {{"signal_id", user.signal_id}};
            try {
                osc::CdmaDecodeResult d =
                    osc::cdma_decode(aggregate, dict.signals.at(user.signal_id), user.distortion,
                                     alphabet, mod, search, strict);
                uj["bit"] = {d.bit.real(), d.bit.imag()};
                uj["raw"] = {d.raw.real(), d.raw.imag()};
                uj["interference"] = d.interference;
                uj["correct"] = std::abs(d.bit - user.bit) < 1e-9;
            } catch (const osc::Error& e) {
                uj["error"] = e.what();
                exit_code = kExitViolation;
            }
            users.push_back(uj);
        }
        result["users"] = users;
    }
    write_output(out, result);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oscillator / chirp signal dictionary toolkit"};
    app.require_subcommand(1);

    std::int64_t p = 0;
    std::string system = "oscillator";
    std::string format = "json";
    std::string out;
    std::string dict_path;
    std::string scenario_path;
    bool strict = false;
    osc::VerifyOptions opt;
    opt.threads = default_threads();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "output path (default: stdout or derived name)");
        cmd->add_option("--threads", opt.threads, "worker thread count (env OSC_THREADS)");
    };

    CLI::App* gen = app.add_subcommand("generate", "construct a signal dictionary");
    gen->add_option("--p", p, "odd prime modulus")->required();
    gen->add_option("--system", system,
                    "heisenberg|split|nonsplit|oscillator|extended|standard");
    gen->add_option("--format", format, "json|bin")->check(CLI::IsMember({"json", "bin"}));
    add_common(gen);

    CLI::App* ver = app.add_subcommand("verify", "check correlation/supremum/Fourier bounds");
    ver->add_option("dictionary", dict_path, "dictionary file (json or bin)");
    ver->add_option("--p", p, "build the system in-memory instead of loading");
    ver->add_option("--system", system,
                    "heisenberg|split|nonsplit|oscillator|extended|standard");
    ver->add_option("--tolerance", opt.tolerance, "bound tolerance (default 1e-9)");
    ver->add_option("--pair-budget", opt.pair_budget,
                    "max (pair, shift) cells before sampling kicks in");
    ver->add_option("--seed", opt.seed, "sampling seed");
    add_common(ver);

    CLI::App* radar = app.add_subcommand("radar", "time/phase shift recovery simulation");
    radar->add_option("scenario", scenario_path, "scenario json")->required();
    radar->add_flag("--strict", strict, "exit 1 on ambiguous peak");
    add_common(radar);

    CLI::App* cdma = app.add_subcommand("cdma", "multi-user decoding simulation");
    cdma->add_option("scenario", scenario_path, "scenario json")->required();
    cdma->add_flag("--strict", strict, "exit 1 when decode margin breaches the threshold");
    add_common(cdma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_generate({p, system}, format, out, opt.threads);
        if (ver->parsed()) {
            std::optional<SystemSpec> spec;
            if (p != 0) spec = SystemSpec{p, system};
            return run_verify(dict_path, spec, opt, out);
        }
        if (radar->parsed()) return run_radar(scenario_path, out, strict);
        if (cdma->parsed()) return run_cdma(scenario_path, out, strict);
    } catch (const osc::NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const osc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const osc::AmbiguousPeak& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const osc::DecodeMarginBelowThreshold& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const osc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
