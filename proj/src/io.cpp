#include "osc/io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace osc {

namespace {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::string provenance_type_name(Provenance::Type t) {
    switch (t) {
        case Provenance::Type::external: return "external";
        case Provenance::Type::standard_character: return "standard-character";
        case Provenance::Type::line_character: return "line-character";
        case Provenance::Type::torus_character: return "torus-character";
        case Provenance::Type::translate: return "translate";
    }
    return "external";
}

Provenance::Type provenance_type_from(const std::string& s) {
    if (s == "standard-character") return Provenance::Type::standard_character;
    if (s == "line-character") return Provenance::Type::line_character;
    if (s == "torus-character") return Provenance::Type::torus_character;
    if (s == "translate") return Provenance::Type::translate;
    return Provenance::Type::external;
}

json witness_to_json(const Witness& w) {
    return {{"signal_a", w.signal_a},
            {"signal_b", w.signal_b},
            {"tau", w.tau},
            {"w", w.w},
            {"value", w.value}};
}

}  // namespace

json dictionary_to_json(const SignalDictionary& dict, const json& config) {
    json j;
    j["format"] = "osc-dictionary";
    j["version"] = kLibraryVersion;
    j["config"] = config;
    j["p"] = dict.p;
    j["system"] = to_string(dict.kind);
    j["phase_convention"] = dict.phase_convention;
    j["nu"] = complex_to_json(dict.nu);
    json tori = json::array();
    for (const auto& t : dict.tori)
        tori.push_back({{"id", t.id},
                        {"kind", t.kind},
                        {"order", t.order},
                        {"generator", t.generator},
                        {"character_multiplicity", t.character_multiplicity}});
    j["tori"] = tori;
    json signals = json::array();
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const Signal& s = dict.signals[i];
        json coeffs = json::array();
        for (std::int64_t t = 0; t < s.p; ++t) coeffs.push_back(complex_to_json(s.coeffs[t]));
        signals.push_back({{"id", i},
                           {"provenance",
                            {{"type", provenance_type_name(s.provenance.type)},
                             {"group", s.provenance.group_id},
                             {"character", s.provenance.character},
                             {"tau", s.provenance.tau},
                             {"w", s.provenance.w},
                             {"label", s.provenance.label}}},
                           {"coeffs", coeffs}});
    }
    j["signals"] = signals;
    return j;
}

SignalDictionary dictionary_from_json(const json& j) {
    if (j.value("format", "") != "osc-dictionary") throw ParseError("not an osc-dictionary file");
    SignalDictionary dict;
    dict.p = j.at("p").get<std::int64_t>();
    dict.kind = system_kind_from_string(j.at("system").get<std::string>());
    dict.phase_convention = j.value("phase_convention", "");
    if (j.contains("nu")) dict.nu = complex_from_json(j.at("nu"));
    for (const auto& t : j.value("tori", json::array())) {
        TorusRecord rec;
        rec.id = t.at("id").get<std::int64_t>();
        rec.kind = t.at("kind").get<std::string>();
        rec.order = t.at("order").get<std::int64_t>();
        auto gen = t.at("generator").get<std::vector<std::int64_t>>();
        std::copy_n(gen.begin(), 4, rec.generator.begin());
        rec.character_multiplicity =
            t.value("character_multiplicity", std::vector<std::int64_t>{});
        dict.tori.push_back(std::move(rec));
    }
    for (const auto& sj : j.at("signals")) {
        Signal s;
        s.p = dict.p;
        s.coeffs = CVec::Zero(dict.p);
        const auto& coeffs = sj.at("coeffs");
        if (static_cast<std::int64_t>(coeffs.size()) != dict.p)
            throw ParseError("signal length does not match p");
        for (std::int64_t t = 0; t < dict.p; ++t) s.coeffs[t] = complex_from_json(coeffs.at(t));
        const auto& pv = sj.at("provenance");
        s.provenance.type = provenance_type_from(pv.at("type").get<std::string>());
        s.provenance.group_id = pv.value("group", std::int64_t{-1});
        s.provenance.character = pv.value("character", std::int64_t{-1});
        s.provenance.tau = pv.value("tau", std::int64_t{0});
        s.provenance.w = pv.value("w", std::int64_t{0});
        s.provenance.label = pv.value("label", "");
        dict.signals.push_back(std::move(s));
    }
    return dict;
}

void write_dictionary_json(const std::string& path, const SignalDictionary& dict,
                           const json& config) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << dictionary_to_json(dict, config).dump(2) << "\n";
}

void write_dictionary_binary(const std::string& path, const SignalDictionary& dict) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out.write(kBinaryMagic, 4);
    const std::uint32_t p32 = static_cast<std::uint32_t>(dict.p);
    const std::uint32_t kind32 = static_cast<std::uint32_t>(dict.kind);
    const std::uint64_t count = dict.size();
    out.write(reinterpret_cast<const char*>(&p32), 4);
    out.write(reinterpret_cast<const char*>(&kind32), 4);
    out.write(reinterpret_cast<const char*>(&count), 8);
    for (const auto& s : dict.signals)
        for (std::int64_t t = 0; t < s.p; ++t) {
            const double re = s.coeffs[t].real(), im = s.coeffs[t].imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
}

namespace {

SignalDictionary read_dictionary_binary(std::ifstream& in, const std::string& path) {
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, kBinaryMagic, 4) != 0)
        throw ParseError(path + ": bad magic at byte offset 0");
    std::uint32_t p32 = 0, kind32 = 0;
    std::uint64_t count = 0;
    in.read(reinterpret_cast<char*>(&p32), 4);
    in.read(reinterpret_cast<char*>(&kind32), 4);
    in.read(reinterpret_cast<char*>(&count), 8);
    if (!in) throw ParseError(path + ": truncated header at byte offset 4");
    SignalDictionary dict;
    dict.p = p32;
    dict.kind = static_cast<SystemKind>(kind32);
    for (std::uint64_t i = 0; i < count; ++i) {
        Signal s;
        s.p = dict.p;
        s.coeffs = CVec::Zero(dict.p);
        for (std::int64_t t = 0; t < dict.p; ++t) {
            double re = 0, im = 0;
            in.read(reinterpret_cast<char*>(&re), 8);
            in.read(reinterpret_cast<char*>(&im), 8);
            if (!in)
                throw ParseError(path + ": truncated payload at byte offset " +
                                 std::to_string(20 + (i * p32 + t) * 16));
            s.coeffs[t] = {re, im};
        }
        dict.signals.push_back(std::move(s));
    }
    return dict;
}

}  // namespace

SignalDictionary read_dictionary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    char first = 0;
    in.get(first);
    in.seekg(0);
    if (first == 'O') return read_dictionary_binary(in, path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return dictionary_from_json(j);
}

json report_to_json(const CorrelationReport& report) {
    json j;
    j["dictionary"] = report.dictionary_id;
    j["p"] = report.p;
    j["system"] = to_string(report.kind);
    j["pass"] = report.all_pass();
    if (report.autocorrelation) {
        const auto& s = *report.autocorrelation;
        j["autocorrelation"] = {{"bound", s.bound},
                                {"tolerance", s.tolerance},
                                {"max_off_origin", s.global_max},
                                {"per_signal_max", s.per_signal_max},
                                {"origin_ok", s.origin_ok},
                                {"witness", witness_to_json(s.witness)},
                                {"pass", s.pass}};
    }
    if (report.crosscorrelation) {
        const auto& s = *report.crosscorrelation;
        j["crosscorrelation"] = {{"bound", s.bound},
                                 {"tolerance", s.tolerance},
                                 {"max", s.global_max},
                                 {"witness", witness_to_json(s.witness)},
                                 {"cells_evaluated", s.cells_evaluated},
                                 {"cells_total", s.cells_total},
                                 {"sampled", s.sampled},
                                 {"seed", s.seed},
                                 {"pass", s.pass}};
    }
    if (report.supremum) {
        const auto& s = *report.supremum;
        j["supremum"] = {{"bound", s.bound},
                         {"max_sup", s.global_max_sup},
                         {"per_signal_sup", s.per_signal_sup},
                         {"per_signal_papr", s.per_signal_papr},
                         {"witness_signal", s.witness_signal},
                         {"max_unimodular_deviation", s.max_unimodular_deviation},
                         {"unimodular", s.unimodular},
                         {"pass", s.pass}};
    }
    if (report.fourier) {
        const auto& s = *report.fourier;
        j["fourier_invariance"] = {{"min_overlap", s.min_overlap},
                                   {"witness_signal", s.witness_signal},
                                   {"min_self_overlap", s.min_self_overlap},
                                   {"weyl_tori_checked", s.weyl_tori_checked},
                                   {"eigenvector_pass", s.eigenvector_pass},
                                   {"pass", s.pass}};
    }
    if (report.heisenberg) {
        const auto& s = *report.heisenberg;
        j["heisenberg"] = {{"max_line_pattern_error", s.max_line_pattern_error},
                           {"cross_bound", s.cross_bound},
                           {"max_cross", s.max_cross},
                           {"cross_witness", witness_to_json(s.cross_witness)},
                           {"max_unimodular_deviation", s.max_unimodular_deviation},
                           {"pass", s.pass}};
    }
    return j;
}

json sweep_to_json(const std::vector<CdmaSweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"users", r.users},
                       {"trials", r.trials},
                       {"bits", r.bits},
                       {"errors", r.errors},
                       {"ber", r.ber},
                       {"mean_margin", r.mean_margin},
                       {"max_margin", r.max_margin}});
    return arr;
}

}  // namespace osc
