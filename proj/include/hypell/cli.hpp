#pragma once

#include "hypell/catalog.hpp"
#include "hypell/lattice.hpp"
#include "hypell/oracle.hpp"
#include "hypell/positivity.hpp"
#include "hypell/serialize.hpp"
#include "hypell/seshadri.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hypell::cli {

enum class ExitCode : int { Ok = 0, InputError = 2, OracleViolations = 3 };

/// One unit of work, from command-line flags or a JSONL line.
struct Query {
    std::string command;  // catalog|intersect|ample|seshadri-multi|seshadri-point|seshadri-global|oracle-verify
    json payload = json::object();
    std::optional<std::string> id;
};

struct Answer {
    json result;
    std::string text;
    bool violations = false;
};

namespace detail {

inline void require_keys(const json& payload, std::initializer_list<const char*> allowed, const std::string& command)
{
    if (!payload.is_object())
        throw Error(ErrorCode::InvalidInput, command + ": payload must be a JSON object");
    for (const auto& [key, _] : payload.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw Error(ErrorCode::InvalidInput, command + ": unknown payload field '" + key + "'");
    }
}

template <class T>
T get_field(const json& payload, const char* key, const std::string& command)
{
    if (!payload.contains(key))
        throw Error(ErrorCode::InvalidInput, command + ": missing payload field '" + key + "'");
    try {
        return payload.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::InvalidInput, command + ": malformed payload field '" + key + "': " +
                                                 payload.at(key).dump());
    }
}

inline const SurfaceData& surface_of(const json& payload, const std::string& command)
{
    return surface_params(get_field<int>(payload, "type", command));
}

inline DivisorClass class_of(const json& payload, const char* key, const std::string& command)
{
    if (!payload.contains(key))
        throw Error(ErrorCode::InvalidInput, command + ": missing payload field '" + key + "'");
    const json& j = payload.at(key);
    if (!j.is_object())
        throw Error(ErrorCode::InvalidInput, command + ": field '" + std::string(key) + "' must be {\"a\",\"b\",\"d\"}");
    for (const auto& [k, _] : j.items())
        if (k != "a" && k != "b" && k != "d")
            throw Error(ErrorCode::InvalidInput, command + ": unknown class field '" + k + "'");
    try {
        return j.get<DivisorClass>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::InvalidInput, command + ": malformed class " + j.dump());
    }
}

inline Locus parse_locus(const std::string& text)
{
    if (text == "smooth-a")
        return Locus::SmoothA;
    if (text == "a-minus-e")
        return Locus::AMinusE;
    if (text == "singular-a")
        return Locus::SingularA;
    throw Error(ErrorCode::InvalidInput, "unknown locus '" + text + "' (expected smooth-a|a-minus-e|singular-a)");
}

inline Answer seshadri_answer(const SeshadriResult& r, const std::optional<Certificate>& cert = std::nullopt)
{
    return {to_json_result(r, cert), to_text(r, cert), false};
}

} // namespace detail

/// Validates the payload into typed inputs, then computes.
inline Answer execute(const Query& q)
{
    const std::string& cmd = q.command;
    const json& p = q.payload;

    if (cmd == "catalog") {
        detail::require_keys(p, {"type"}, cmd);
        if (p.contains("type") && !p.at("type").is_null()) {
            const SurfaceData& s = detail::surface_of(p, cmd);
            return {json(s), to_text(s), false};
        }
        json rows = json::array();
        std::string text;
        for (const auto& s : all_surfaces()) {
            rows.push_back(json(s));
            text += to_text(s);
        }
        return {rows, text, false};
    }
    if (cmd == "intersect") {
        detail::require_keys(p, {"type", "lhs", "rhs"}, cmd);
        detail::surface_of(p, cmd);
        DivisorClass lhs = detail::class_of(p, "lhs", cmd);
        DivisorClass rhs = detail::class_of(p, "rhs", cmd);
        Integer value = intersect(lhs, rhs);
        return {json{{"value", value}}, "value: " + value.str() + "\n", false};
    }
    if (cmd == "ample") {
        detail::require_keys(p, {"type", "bundle"}, cmd);
        const SurfaceData& s = detail::surface_of(p, cmd);
        DivisorClass L = detail::class_of(p, "bundle", cmd);
        AmpleVerdict v = decide_ample(L, s);
        return {json(v), to_text(v), false};
    }
    if (cmd == "seshadri-multi") {
        detail::require_keys(p, {"type", "bundle", "config"}, cmd);
        const SurfaceData& s = detail::surface_of(p, cmd);
        DivisorClass L = detail::class_of(p, "bundle", cmd);
        auto cfg = detail::get_field<PointConfig>(p, "config", cmd);
        return detail::seshadri_answer(multipoint_special(L, s, cfg));
    }
    if (cmd == "seshadri-point") {
        detail::require_keys(p, {"type", "bundle", "locus", "on_b_minus_e"}, cmd);
        const SurfaceData& s = detail::surface_of(p, cmd);
        DivisorClass L = detail::class_of(p, "bundle", cmd);
        Locus locus = detail::parse_locus(detail::get_field<std::string>(p, "locus", cmd));
        bool on_bme = p.contains("on_b_minus_e") ? detail::get_field<bool>(p, "on_b_minus_e", cmd) : false;
        return detail::seshadri_answer(point_on_locus(L, s, locus, on_bme));
    }
    if (cmd == "seshadri-global") {
        detail::require_keys(p, {"type", "bundle"}, cmd);
        const SurfaceData& s = detail::surface_of(p, cmd);
        DivisorClass L = detail::class_of(p, "bundle", cmd);
        GlobalResult g = global_constant(L, s);
        return detail::seshadri_answer(g.result, g.certificate);
    }
    if (cmd == "oracle-verify") {
        detail::require_keys(p, {"prop", "type", "grid_max", "box", "jobs"}, cmd);
        auto prop = detail::get_field<std::string>(p, "prop", cmd);
        const SurfaceData& s = detail::surface_of(p, cmd);
        int grid = detail::get_field<int>(p, "grid_max", cmd);
        int box = p.contains("box") ? detail::get_field<int>(p, "box", cmd) : 16;
        int jobs = p.contains("jobs") ? detail::get_field<int>(p, "jobs", cmd) : 1;
        if (jobs < 1)
            throw Error(ErrorCode::InvalidInput, "jobs must be at least 1");
        OracleReport rep;
        if (prop == "multipoint")
            rep = verify_multipoint_formula(s, grid, box, jobs);
        else if (prop == "single-chain")
            rep = verify_single_point_chain(s, grid, box, jobs);
        else if (prop == "global-witness")
            rep = verify_global_witness(s, grid, jobs);
        else
            throw Error(ErrorCode::InvalidInput,
                        "unknown oracle property '" + prop + "' (expected multipoint|single-chain|global-witness)");
        return {json(rep), to_text(rep), !rep.pass()};
    }
    throw Error(ErrorCode::InvalidInput, "unknown command '" + cmd + "'");
}

/// Comma list of integers; `what` names the flag in error messages.
inline std::vector<Integer> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(parse_integer(token));
        } catch (const Error&) {
            throw Error(ErrorCode::InvalidInput, "malformed " + what + " '" + text + "': bad token '" + token + "'");
        }
    }
    if (!text.empty() && text.back() == ',')
        throw Error(ErrorCode::InvalidInput, "malformed " + what + " '" + text + "': trailing ','");
    return out;
}

/// "a,b,d1,...,dR" (count fixes r) or the uniform shorthand "a,b,d" with r
/// taken from --r. A count that matches neither reading is an input error.
inline DivisorClass parse_bundle(const std::string& text, std::optional<int> r, const std::string& what = "bundle")
{
    auto values = parse_int_list(text, what);
    if (values.size() < 2)
        throw Error(ErrorCode::InvalidInput, "malformed " + what + " '" + text + "': need at least a,b");
    DivisorClass c{values[0], values[1], {values.begin() + 2, values.end()}};
    if (!r)
        return c;
    if (*r < 0)
        throw Error(ErrorCode::InvalidInput, "--r must be non-negative, got " + std::to_string(*r));
    const auto n = c.d.size();
    if (n == static_cast<std::size_t>(*r))
        return c;
    if (n == 1 && *r > 0)
        return DivisorClass::uniform(c.a, c.b, static_cast<std::size_t>(*r), c.d.front());
    throw Error(ErrorCode::InvalidInput, what + " '" + text + "' has " + std::to_string(n) +
                                             " exceptional coefficients but --r " + std::to_string(*r));
}

namespace detail {

inline void write_output(const std::optional<std::string>& path, std::ostream& out, const std::string& content)
{
    if (!path) {
        out << content;
        return;
    }
    std::ofstream file(*path);
    if (!file)
        throw Error(ErrorCode::InvalidInput, "cannot open output file '" + *path + "'");
    file << content;
}

inline json error_json(const std::string& code, const std::string& message)
{
    return json{{"code", code}, {"message", message}};
}

} // namespace detail

/// Parses and evaluates one JSONL line; never throws.
inline json run_line(const std::string& line, bool& errored)
{
    json out{{"id", nullptr}};
    errored = false;
    try {
        json j = json::parse(line);
        if (!j.is_object())
            throw Error(ErrorCode::InvalidInput, "query must be a JSON object");
        if (j.contains("id") && !j.at("id").is_null())
            out["id"] = j.at("id").is_string() ? j.at("id") : json(j.at("id").dump());
        for (const auto& [key, _] : j.items())
            if (key != "id" && key != "command" && key != "payload")
                throw Error(ErrorCode::InvalidInput, "unknown query field '" + key + "'");
        if (!j.contains("command") || !j.at("command").is_string())
            throw Error(ErrorCode::InvalidInput, "query needs a string 'command'");
        Query q;
        q.command = j.at("command").get<std::string>();
        q.payload = j.value("payload", json::object());
        out["command"] = q.command;
        Answer a = execute(q);
        out["result"] = std::move(a.result);
    } catch (const Error& e) {
        errored = true;
        out["error"] = detail::error_json(std::string(to_string(e.code())), e.what());
    } catch (const json::exception& e) {
        errored = true;
        out["error"] = detail::error_json("invalid_input", std::string("malformed JSON: ") + e.what());
    }
    return out;
}

/// One result object per input line, in order. Blank lines are skipped.
inline int run_batch(std::istream& in, std::ostream& out)
{
    bool any_error = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        bool errored = false;
        out << run_line(line, errored).dump() << '\n';
        any_error = any_error || errored;
    }
    return any_error ? static_cast<int>(ExitCode::InputError) : static_cast<int>(ExitCode::Ok);
}

/// Full command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ampleness and Seshadri constants on blow-ups of hyperelliptic surfaces", "hypell"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string format = "json";
    std::optional<std::string> output;
    std::optional<std::string> batch;
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "write to PATH instead of stdout");
    app.add_option("--batch", batch, "JSONL file of queries");

    Query q;
    int type = 0;
    std::optional<int> r;
    std::string bundle, lhs, rhs, config, locus, prop;
    bool singular_a = false, on_bme = false;
    int grid_max = 0, box = 16, jobs = 1;

    auto* catalog = app.add_subcommand("catalog", "classification table");
    catalog->require_subcommand(1);
    auto* show = catalog->add_subcommand("show", "print table rows as JSON");
    std::optional<int> show_type;
    show->add_option("--type", show_type, "surface type 1..7");

    auto* isect = app.add_subcommand("intersect", "intersection number of two classes");
    isect->add_option("--type", type)->required();
    isect->add_option("--r", r);
    isect->add_option("--lhs", lhs)->required();
    isect->add_option("--rhs", rhs)->required();

    auto* ample = app.add_subcommand("ample", "decide ampleness");
    ample->add_option("--type", type)->required();
    ample->add_option("--r", r);
    ample->add_option("--bundle", bundle)->required();

    auto* sesh = app.add_subcommand("seshadri", "Seshadri constants");
    sesh->require_subcommand(1);
    auto* multi = sesh->add_subcommand("multi", "multi-point constant on X at special points");
    multi->add_option("--type", type)->required();
    multi->add_option("--bundle", bundle, "a,b")->required();
    multi->add_option("--config", config, "r,s0,t0,lA,lB")->required();
    multi->add_flag("--singular-a", singular_a);
    auto* point = sesh->add_subcommand("point", "single-point constant on X_r");
    point->add_option("--type", type)->required();
    point->add_option("--r", r);
    point->add_option("--bundle", bundle)->required();
    point->add_option("--locus", locus)->required()->check(CLI::IsMember({"smooth-a", "a-minus-e", "singular-a"}));
    point->add_flag("--on-b-minus-e", on_bme);
    auto* global = sesh->add_subcommand("global", "global constant on X_r");
    global->add_option("--type", type)->required();
    global->add_option("--r", r);
    global->add_option("--bundle", bundle)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force verification");
    oracle->require_subcommand(1);
    auto* verify = oracle->add_subcommand("verify", "run a grid verification");
    verify->add_option("--prop", prop)->required()->check(CLI::IsMember({"multipoint", "single-chain", "global-witness"}));
    verify->add_option("--type", type)->required();
    verify->add_option("--grid-max", grid_max)->required();
    verify->add_option("--box", box);
    verify->add_option("--jobs", jobs);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    }

    try {
        if (batch) {
            std::ifstream in(*batch);
            if (!in)
                throw Error(ErrorCode::InvalidInput, "cannot open batch file '" + *batch + "'");
            std::ostringstream buffer;
            int code = run_batch(in, buffer);
            detail::write_output(output, out, buffer.str());
            return code;
        }

        auto type_json = [&] { return json(type); };
        if (show->parsed()) {
            q.command = "catalog";
            if (show_type)
                q.payload["type"] = *show_type;
        } else if (isect->parsed()) {
            q.command = "intersect";
            q.payload = {{"type", type_json()}, {"lhs", parse_bundle(lhs, r, "lhs")}, {"rhs", parse_bundle(rhs, r, "rhs")}};
        } else if (ample->parsed()) {
            q.command = "ample";
            q.payload = {{"type", type_json()}, {"bundle", parse_bundle(bundle, r)}};
        } else if (multi->parsed()) {
            q.command = "seshadri-multi";
            DivisorClass L = parse_bundle(bundle, 0);
            auto cfg_values = parse_int_list(config, "config");
            if (cfg_values.size() != 5)
                throw Error(ErrorCode::InvalidInput, "malformed config '" + config + "': expected r,s0,t0,lA,lB");
            json cfg{{"r", cfg_values[0]}, {"s0", cfg_values[1]}, {"t0", cfg_values[2]},
                     {"lA", cfg_values[3]}, {"lB", cfg_values[4]}, {"singular_a", singular_a}};
            for (const char* key : {"r", "s0", "t0", "lA", "lB"})
                if (!cfg[key].is_number_integer() || cfg[key].get<std::int64_t>() > std::numeric_limits<int>::max())
                    throw Error(ErrorCode::InvalidInput, "config entry " + std::string(key) + " out of range");
            q.payload = {{"type", type_json()}, {"bundle", L}, {"config", cfg}};
        } else if (point->parsed()) {
            q.command = "seshadri-point";
            q.payload = {{"type", type_json()}, {"bundle", parse_bundle(bundle, r)}, {"locus", locus},
                         {"on_b_minus_e", on_bme}};
        } else if (global->parsed()) {
            q.command = "seshadri-global";
            q.payload = {{"type", type_json()}, {"bundle", parse_bundle(bundle, r)}};
        } else if (verify->parsed()) {
            q.command = "oracle-verify";
            q.payload = {{"prop", prop}, {"type", type_json()}, {"grid_max", grid_max}, {"box", box}, {"jobs", jobs}};
        } else {
            err << app.help();
            return static_cast<int>(ExitCode::InputError);
        }

        Answer a = execute(q);
        std::string rendered = format == "text" ? a.text : a.result.dump(2) + "\n";
        detail::write_output(output, out, rendered);
        return a.violations ? static_cast<int>(ExitCode::OracleViolations) : static_cast<int>(ExitCode::Ok);
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    }
}

} // namespace hypell::cli
