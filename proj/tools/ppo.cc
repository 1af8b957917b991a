// Copyright 2026 The ppo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppo/catalog.h"
#include "ppo/error.h"
#include "ppo/hw_clifford.h"
#include "ppo/orbit_engine.h"
#include "ppo/spectra_census.h"
#include "ppo/verify.h"

using namespace ppo;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInfeasible = 3, kCollision = 4 };

struct ExitError {
    int code;
    std::string message;
};

struct Options {
    std::uint32_t n = 0;
    std::string group = "sl";
    std::string format = "table";
    std::string method = "burnside";
    std::string out;
    std::string cache_dir = "./.ppo-cache";
    std::string suite = "all";
    std::string state = "mub:0:0";
    std::uint64_t plane = 0;
    std::uint64_t seed = 0;
    double tol = 1e-6;
};

GroupKind group_kind(const Options &o) {
    return o.group == "esl" ? GroupKind::ESL : GroupKind::SL;
}

void require_prime(std::uint32_t n, std::uint32_t limit) {
    if (!is_odd_prime(n) || n > limit) {
        throw ExitError{kBadInput, "--n must be an odd prime <= " + std::to_string(limit)};
    }
}

void emit(const Options &o, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) {
        throw ExitError{kBadInput, "cannot write " + o.out};
    }
}

using Rows = std::vector<std::vector<std::string>>;

std::string render(const std::string &format, const std::vector<std::string> &header, const Rows &rows) {
    std::ostringstream s;
    if (format == "csv") {
        for (std::size_t c = 0; c < header.size(); c++) {
            s << (c ? "," : "") << header[c];
        }
        s << "\n";
        for (const auto &row : rows) {
            for (std::size_t c = 0; c < row.size(); c++) {
                s << (c ? "," : "") << row[c];
            }
            s << "\n";
        }
        return s.str();
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); c++) {
        width[c] = header[c].size();
        for (const auto &row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t c = 0; c < cells.size(); c++) {
            s << (c ? "  " : "") << cells[c] << std::string(width[c] - cells[c].size(), ' ');
        }
        s << "\n";
    };
    line(header);
    for (const auto &row : rows) {
        line(row);
    }
    return s.str();
}

std::string matrix_cell(const ordered_json &m) {
    std::ostringstream s;
    s << "(" << m[0][0].get<int>() << " " << m[0][1].get<int>() << "; " << m[1][0].get<int>() << " "
      << m[1][1].get<int>() << ")";
    return s.str();
}

std::string str(const ordered_json &j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

int cmd_classes(const Options &o) {
    require_prime(o.n, 19);
    Field field(o.n);
    ordered_json doc = catalog_document(o.n, group_kind(o), "class_table", class_table_payload(field, group_kind(o)));
    if (o.format == "json") {
        emit(o, dump_catalog(doc));
        return kOk;
    }
    Rows rows;
    for (const auto &c : doc["payload"]["classes"]) {
        rows.push_back({str(c["label"]), str(c["size"]), str(c["order"]), matrix_cell(c["representative"])});
    }
    emit(o, render(o.format, {"class", "size", "order", "representative"}, rows));
    return kOk;
}

int cmd_fixed_points(const Options &o) {
    require_prime(o.n, 19);
    CoordinateSystem cs{Field(o.n)};
    ordered_json doc = catalog_document(o.n, group_kind(o), "fixed_points", fixed_points_payload(cs, group_kind(o)));
    if (o.format == "json") {
        emit(o, dump_catalog(doc));
        return kOk;
    }
    Rows rows;
    for (const auto &c : doc["payload"]["classes"]) {
        rows.push_back({str(c["label"]), str(c["size"]), str(c["order"]), str(c["fixed_points"]),
                        str(c["fixed_r_vectors"]), str(c["fixed_planes"])});
    }
    emit(o, render(o.format, {"class", "size", "order", "fixed_points", "fixed_r_vectors", "fixed_planes"}, rows));
    return kOk;
}

std::string size_summary(const OrbitCatalog &cat) {
    std::map<std::uint64_t, std::uint64_t> mult;
    for (const Orbit &orb : cat.orbits) {
        mult[orb.size]++;
    }
    std::ostringstream s;
    bool first = true;
    for (const auto &[size, count] : mult) {
        s << (first ? "" : " ") << size;
        if (count > 1) {
            s << "^" << count;
        }
        first = false;
    }
    return s.str();
}

int cmd_orbits(const Options &o) {
    require_prime(o.n, 19);
    CoordinateSystem cs{Field(o.n)};
    const GroupKind kind = group_kind(o);
    if (o.method == "explicit") {
        if (o.n > 7) {
            throw ExitError{kInfeasible, "explicit orbit decomposition needs N <= 7"};
        }
        OrbitCatalog cat = orbit_decomposition(cs, kind);
        std::ostringstream s;
        s << "N=" << o.n << " group=" << o.group << " method=explicit orbits=" << cat.orbits.size()
          << " planes=" << cat.total << "\nsizes: " << size_summary(cat) << "\n";
        if (!o.out.empty()) {
            emit(o, dump_catalog(catalog_document(o.n, kind, "orbit_catalog", orbit_catalog_payload(cs, cat))));
        } else if (o.format == "json") {
            std::cout << dump_catalog(catalog_document(o.n, kind, "orbit_catalog", orbit_catalog_payload(cs, cat)));
            return kOk;
        }
        std::cout << s.str();
        return kOk;
    }
    if (o.n > 13) {
        throw ExitError{kInfeasible, "Burnside count needs N <= 13"};
    }
    BurnsideResult r = burnside_count(cs, kind, OrbitSpace::Planes);
    if (!r.exact) {
        throw ExitError{kVerifyFailed, "fixed-point sum not divisible by the group order"};
    }
    if (o.format == "json" || !o.out.empty()) {
        ordered_json payload;
        payload["method"] = "burnside";
        payload["orbit_count"] = r.orbits;
        payload["fixed_sum"] = r.fixed_sum;
        payload["group_order"] = r.group_order;
        std::string text = dump_catalog(catalog_document(o.n, kind, "orbit_catalog", payload));
        if (o.out.empty()) {
            std::cout << text;
            return kOk;
        }
        emit(o, text);
    }
    std::cout << r.orbits << "\n";
    return kOk;
}

std::string cache_path(const Options &o) {
    char tol[32];
    std::snprintf(tol, sizeof(tol), "%g", o.tol);
    return (std::filesystem::path(o.cache_dir) /
            ("spectra-n" + std::to_string(o.n) + "-tol" + tol + "-v" + kToolVersion + ".json"))
        .string();
}

std::string load_cached(const Options &o, const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        return "";
    }
    std::stringstream buf;
    buf << f.rdbuf();
    ordered_json doc = ordered_json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded() || doc.value("schema_version", 0) != kSchemaVersion ||
        doc.value("tool_version", "") != kToolVersion || doc.value("N", 0u) != o.n) {
        return "";
    }
    return buf.str();
}

int cmd_spectra(const Options &o) {
    require_prime(o.n, 19);
    if (o.n > 7) {
        throw ExitError{kInfeasible, "spectra census needs N <= 7"};
    }
    if (!(o.tol > 0)) {
        throw ExitError{kBadInput, "--tol must be positive"};
    }
    const std::string path = cache_path(o);
    std::string text = load_cached(o, path);
    if (text.empty()) {
        Field field(o.n);
        HilbertSpace h(field);
        CoordinateSystem cs(field);
        SpectraCensus census = spectra_census(h, cs, o.tol);
        text = dump_catalog(catalog_document(o.n, GroupKind::ESL, "spectra_census", spectra_payload(cs, census)));
        std::error_code ec;
        std::filesystem::create_directories(o.cache_dir, ec);
        std::ofstream f(path, std::ios::binary);
        f << text;
    }
    if (o.format == "json") {
        emit(o, text);
        return kOk;
    }
    ordered_json doc = ordered_json::parse(text);
    Rows rows;
    for (const auto &c : doc["payload"]["spectra"]) {
        std::ostringstream vals;
        bool first = true;
        for (const auto &x : c["eigenvalues"]) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.5f", x.get<double>() == 0 ? 0.0 : x.get<double>());
            vals << (first ? "" : " ") << buf;
            first = false;
        }
        rows.push_back({vals.str(), str(c["count"])});
    }
    emit(o, render(o.format, {"eigenvalues", "count"}, rows));
    return kOk;
}

CMatrix parse_state(const HilbertSpace &h, const std::string &text) {
    const std::uint32_t n = h.dimension();
    if (text == "mixed") {
        return CMatrix::identity(n) * Complex(1.0 / n);
    }
    unsigned m = 0, r = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "mub:%u:%u%c", &m, &r, &tail) != 2 || m > n || r >= n) {
        throw ExitError{kBadInput, "--state must be 'mixed' or 'mub:M:R' with M <= N, R < N"};
    }
    return h.mub_projector({m, r});
}

int cmd_wigner(const Options &o) {
    require_prime(o.n, 19);
    Field field(o.n);
    HilbertSpace h(field);
    CoordinateSystem cs(field);
    if (o.plane >= cs.plane_count()) {
        throw ExitError{kBadInput, "--plane out of range"};
    }
    RVector r = cs.plane_representative(cs.decode_plane(o.plane));
    auto w = wigner_distribution(parse_state(h, o.state), h.affine_plane_operators(r));
    if (o.format == "json") {
        ordered_json points = ordered_json::array();
        for (const auto &[pt, v] : w) {
            points.push_back({{"q", pt.q}, {"p", pt.p}, {"w", catalog_number(v)}});
        }
        ordered_json doc;
        doc["N"] = o.n;
        doc["plane"] = o.plane;
        doc["plane_label"] = cs.decode_plane(o.plane);
        doc["state"] = o.state;
        doc["points"] = std::move(points);
        emit(o, doc.dump(2) + "\n");
        return kOk;
    }
    std::vector<std::string> header = {"p\\q"};
    for (std::uint32_t q = 0; q < o.n; q++) {
        header.push_back(std::to_string(q));
    }
    Rows rows;
    for (std::uint32_t p = o.n; p-- > 0;) {
        std::vector<std::string> row = {std::to_string(p)};
        for (std::uint32_t q = 0; q < o.n; q++) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", catalog_number(w.at({q, p})));
            row.push_back(buf);
        }
        rows.push_back(std::move(row));
    }
    emit(o, render(o.format, header, rows));
    return kOk;
}

int cmd_verify(const Options &o) {
    require_prime(o.n, 11);
    auto checks = run_verify(o.suite, o.n, o.seed);
    std::ostringstream s;
    s << "ppo verify N=" << o.n << " suite=" << o.suite << " seed=" << o.seed << "\n";
    std::size_t failed = 0;
    for (const VerifyCheck &c : checks) {
        const char *status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        failed += !c.passed;
        s << status << "  " << c.suite << "/" << c.name;
        if (!c.detail.empty()) {
            s << "  (" << c.detail << ")";
        }
        s << "\n";
    }
    s << checks.size() << " checks, " << failed << " failed\n";
    emit(o, s.str());
    return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Discrete Wigner function toolkit for odd prime dimension"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats = {"json", "csv", "table"};

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--n", o.n, "Odd prime dimension")->required();
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", o.out, "Write output to FILE");
        cmd->add_option("--seed", o.seed, "Seed for randomized checks");
    };
    auto add_group = [&](CLI::App *cmd) {
        cmd->add_option("--group", o.group, "sl or esl")->check(CLI::IsMember({"sl", "esl"}));
    };

    auto *classes = app.add_subcommand("classes", "Conjugacy classes, sizes and cyclic orders");
    add_common(classes);
    add_group(classes);

    auto *orbits = app.add_subcommand("orbits", "Orbit count on affine planes");
    add_common(orbits);
    add_group(orbits);
    orbits->add_option("--method", o.method, "burnside or explicit")->check(CLI::IsMember({"burnside", "explicit"}));

    auto *spectra = app.add_subcommand("spectra", "Spectrum census of phase point operators");
    add_common(spectra);
    spectra->add_option("--tol", o.tol, "Eigenvalue clustering tolerance");
    spectra->add_option("--cache-dir", o.cache_dir, "Cache directory");

    auto *fixed = app.add_subcommand("fixed-points", "Fixed points per conjugacy class");
    add_common(fixed);
    add_group(fixed);

    auto *wigner = app.add_subcommand("wigner", "Wigner distribution of a state");
    add_common(wigner);
    wigner->add_option("--plane", o.plane, "Plane code");
    wigner->add_option("--state", o.state, "'mixed' or 'mub:M:R'");

    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    add_common(verify);
    std::vector<std::string> suite_names = verify_suite_names();
    suite_names.push_back("all");
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (classes->parsed()) {
            return cmd_classes(o);
        }
        if (orbits->parsed()) {
            return cmd_orbits(o);
        }
        if (spectra->parsed()) {
            return cmd_spectra(o);
        }
        if (fixed->parsed()) {
            return cmd_fixed_points(o);
        }
        if (wigner->parsed()) {
            return cmd_wigner(o);
        }
        return cmd_verify(o);
    } catch (const ExitError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const PpoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::ToleranceCollision:
                return kCollision;
            case ErrorCode::InvalidModulus:
            case ErrorCode::InvalidArgument:
            case ErrorCode::NotAState:
                return kBadInput;
            default:
                return kVerifyFailed;
        }
    }
}
