#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "osc/io.hpp"
#include "osc/oscillator.hpp"

using namespace osc;

namespace {

SignalDictionary sample_dictionary() {
    PrimeModulus mod(5);
    WeilRepresentation rho(mod);
    return build_oscillator_system(rho, enumerate_all_tori(mod), OscillatorKind::both);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/osc-test-" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("json round trip preserves every bit") {
    SignalDictionary dict = sample_dictionary();
    json j = dictionary_to_json(dict, {{"seed", 7}});
    CHECK(j["format"] == "osc-dictionary");
    CHECK(j["p"] == 5);
    CHECK(j["system"] == "oscillator");
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["signals"].size() == dict.size());
    CHECK(j["tori"].size() == dict.tori.size());

    SignalDictionary back = dictionary_from_json(j);
    REQUIRE(back.size() == dict.size());
    CHECK(back.kind == dict.kind);
    CHECK(back.nu == dict.nu);
    CHECK(back.phase_convention == dict.phase_convention);
    for (std::size_t i = 0; i < dict.size(); ++i) {
        CHECK((back.signals[i].coeffs - dict.signals[i].coeffs).norm() == 0.0);
        CHECK(back.signals[i].provenance.type == dict.signals[i].provenance.type);
        CHECK(back.signals[i].provenance.group_id == dict.signals[i].provenance.group_id);
        CHECK(back.signals[i].provenance.character == dict.signals[i].provenance.character);
    }
    for (std::size_t i = 0; i < dict.tori.size(); ++i) {
        CHECK(back.tori[i].generator == dict.tori[i].generator);
        CHECK(back.tori[i].order == dict.tori[i].order);
        CHECK(back.tori[i].character_multiplicity == dict.tori[i].character_multiplicity);
    }
}

TEST_CASE("binary round trip") {
    SignalDictionary dict = sample_dictionary();
    TempFile f("dict.oscb");
    write_dictionary_binary(f.path, dict);

    const std::string raw = slurp(f.path);
    REQUIRE(raw.size() == 20 + dict.size() * 5 * 16);  // header + interleaved doubles
    CHECK(raw.compare(0, 4, "OSC1") == 0);

    SignalDictionary back = read_dictionary(f.path);
    REQUIRE(back.size() == dict.size());
    CHECK(back.p == 5);
    CHECK(back.kind == dict.kind);
    for (std::size_t i = 0; i < dict.size(); ++i)
        CHECK((back.signals[i].coeffs - dict.signals[i].coeffs).norm() == 0.0);
}

TEST_CASE("format sniffing on json files") {
    SignalDictionary dict = sample_dictionary();
    TempFile f("dict.json");
    write_dictionary_json(f.path, dict);
    SignalDictionary back = read_dictionary(f.path);
    REQUIRE(back.size() == dict.size());
    for (std::size_t i = 0; i < dict.size(); ++i)
        CHECK((back.signals[i].coeffs - dict.signals[i].coeffs).norm() == 0.0);
}

TEST_CASE("parse errors carry byte offsets") {
    SignalDictionary dict = sample_dictionary();
    TempFile f("trunc.oscb");
    write_dictionary_binary(f.path, dict);
    const std::string raw = slurp(f.path);

    {
        std::ofstream out(f.path, std::ios::binary);
        out.write(raw.data(), 100);  // cut inside the first signal payload
    }
    CHECK_THROWS_WITH_AS(read_dictionary(f.path),
                         doctest::Contains("truncated payload at byte offset"), ParseError);

    {
        std::ofstream out(f.path, std::ios::binary);
        out << "OSCX garbage";
    }
    CHECK_THROWS_WITH_AS(read_dictionary(f.path), doctest::Contains("byte offset 0"), ParseError);

    {
        std::ofstream out(f.path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_dictionary(f.path), ParseError);

    CHECK_THROWS_AS(dictionary_from_json(json{{"format", "something-else"}}), ParseError);
}

TEST_CASE("regeneration is byte-identical") {
    TempFile a("gen-a.json"), b("gen-b.json"), c("gen-a.oscb"), d("gen-b.oscb");
    SignalDictionary first = sample_dictionary();
    SignalDictionary second = sample_dictionary();
    write_dictionary_json(a.path, first, {{"seed", 0}});
    write_dictionary_json(b.path, second, {{"seed", 0}});
    CHECK(slurp(a.path) == slurp(b.path));
    write_dictionary_binary(c.path, first);
    write_dictionary_binary(d.path, second);
    CHECK(slurp(c.path) == slurp(d.path));
}

TEST_CASE("report serialization") {
    PrimeModulus mod(5);
    SignalDictionary dict = sample_dictionary();
    CorrelationReport report;
    report.dictionary_id = "test";
    report.p = 5;
    report.kind = dict.kind;
    report.autocorrelation = verify_autocorrelation(dict, mod);
    report.crosscorrelation = verify_crosscorrelation(dict, mod);
    report.supremum = verify_supremum_and_papr(dict, mod);
    json j = report_to_json(report);
    CHECK(j["pass"] == true);
    CHECK(j["autocorrelation"]["bound"].get<double>() == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(j["crosscorrelation"]["cells_total"].get<std::uint64_t>() ==
          report.crosscorrelation->cells_total);
    CHECK(j["supremum"]["per_signal_sup"].size() == dict.size());
    // identical inputs give bit-identical reports
    CorrelationReport again;
    again.dictionary_id = "test";
    again.p = 5;
    again.kind = dict.kind;
    again.autocorrelation = verify_autocorrelation(dict, mod);
    again.crosscorrelation = verify_crosscorrelation(dict, mod);
    again.supremum = verify_supremum_and_papr(dict, mod);
    CHECK(report_to_json(again).dump() == j.dump());
}

TEST_CASE("cdma sweep serialization") {
    std::vector<CdmaSweepRow> rows(2);
    rows[0] = {1, 10, 10, 0, 0.0, 0.01, 0.02};
    rows[1] = {2, 10, 20, 1, 0.05, 0.2, 0.4};
    json j = sweep_to_json(rows);
    REQUIRE(j.size() == 2);
    CHECK(j[1]["users"] == 2);
    CHECK(j[1]["ber"].get<double>() == doctest::Approx(0.05));
}
