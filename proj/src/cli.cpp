#include "fairshare/cli.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairshare/generator.hpp"
#include "fairshare/solver.hpp"

namespace fairshare::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

Nat parse_nat(const std::string& text, const std::string& what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return c >= '0' && c <= '9'; }))
        throw UsageError(what + " must be a nonnegative decimal integer, got '" + text + "'");
    return Nat(text);
}

std::vector<Nat> parse_divisors(const std::string& text) {
    std::vector<Nat> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_nat(text.substr(start, comma - start), "divisor"));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Json nat_json(const Nat& n) { return n.str(); }

Json nats_json(std::span<const Nat> values) {
    Json arr = Json::array();
    for (const Nat& v : values)
        arr.push_back(nat_json(v));
    return arr;
}

Json rational_json(const Rational& q) {
    Json obj = Json::object();
    obj["num"] = q.num().str();
    obj["den"] = q.den().str();
    return obj;
}

Json rationals_json(std::span<const Rational> values) {
    Json arr = Json::array();
    for (const Rational& q : values)
        arr.push_back(rational_json(q));
    return arr;
}

Json spec_header(const ShareSpec& spec) {
    Json doc = Json::object();
    doc["divisors"] = nats_json(spec.divisors());
    doc["r"] = nat_json(spec.sum().r);
    doc["m"] = nat_json(spec.sum().m);
    return doc;
}

// Text rendering is driven by the JSON document so both formats carry the
// same numbers in the same order.
std::string scalar_text(const Json& v) {
    if (v.is_null())
        return "unbounded";
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.contains("num") && v.contains("den"))
        return v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
    return v.dump();
}

void render_text(const Json& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_array()) {
            out << key << ": " << scalar_text(value) << '\n';
            continue;
        }
        const bool nested = std::any_of(value.begin(), value.end(),
                                        [](const Json& e) { return e.is_object() && !e.contains("num"); });
        if (!nested) {
            out << key << ":";
            bool first = true;
            for (const Json& e : value) {
                out << (first ? " " : ", ") << scalar_text(e);
                first = false;
            }
            out << '\n';
            continue;
        }
        out << key << ":\n";
        for (const Json& e : value) {
            out << " ";
            if (e.contains("text")) {
                out << " [" << e["kind"].get<std::string>() << "] " << e["text"].get<std::string>();
            } else {
                bool first = true;
                for (const auto& [k, v] : e.items()) {
                    out << (first ? " " : ", ") << k << " ";
                    if (v.is_array()) {
                        bool inner_first = true;
                        for (const Json& x : v) {
                            out << (inner_first ? "" : ",") << scalar_text(x);
                            inner_first = false;
                        }
                    } else {
                        out << scalar_text(v);
                    }
                    first = false;
                }
            }
            out << '\n';
        }
    }
}

struct Emitter {
    bool json;
    std::ostream& out;

    void operator()(const Json& doc) const {
        if (json)
            out << doc.dump() << '\n';
        else
            render_text(doc, out);
    }
};

void add_solution(Json& doc, const LoanSolution& sol) {
    doc["loan"] = nat_json(sol.loan);
    doc["augmented"] = nat_json(sol.augmented);
    doc["multiplier"] = nat_json(sol.multiplier);
    doc["shares"] = nats_json(sol.shares);
}

void add_infeasible(Json& doc, const Infeasible& diag) {
    if (diag.nearest_below)
        doc["nearest_below"] = nat_json(*diag.nearest_below);
    doc["nearest_above"] = nat_json(diag.nearest_above);
}

void report_infeasible(const Infeasible& diag, std::ostream& err) {
    err << "infeasible: herd " << diag.herd << " is not a multiple of r = " << diag.r
        << "; nearest feasible herd";
    if (diag.nearest_below)
        err << "s: " << *diag.nearest_below << " and " << diag.nearest_above << '\n';
    else
        err << ": " << diag.nearest_above << '\n';
}

int cmd_check(const std::string& divisors, const Emitter& emit) {
    const ShareSpec spec = validate_spec(parse_divisors(divisors));
    Json doc = spec_header(spec);
    doc["sum"] = rational_json(spec.sum().reduced);
    emit(doc);
    return kSuccess;
}

int cmd_solve(const std::string& divisors, const std::string& herd_text, const Emitter& emit,
              std::ostream& err) {
    const ShareSpec spec = validate_spec(parse_divisors(divisors));
    const Nat herd = parse_nat(herd_text, "herd");
    const SolveResult result = solve(spec, herd);
    Json doc = spec_header(spec);
    doc["herd"] = nat_json(herd);
    if (const auto* sol = std::get_if<LoanSolution>(&result)) {
        doc["feasible"] = true;
        add_solution(doc, *sol);
        emit(doc);
        return kSuccess;
    }
    const auto& diag = std::get<Infeasible>(result);
    doc["feasible"] = false;
    add_infeasible(doc, diag);
    emit(doc);
    report_infeasible(diag, err);
    return kInfeasible;
}

int cmd_herds(const std::string& divisors, const std::string& limit_text, const Emitter& emit) {
    const ShareSpec spec = validate_spec(parse_divisors(divisors));
    const Nat limit = parse_nat(limit_text, "limit");
    Json doc = spec_header(spec);
    doc["limit"] = nat_json(limit);
    Json rows = Json::array();
    for (const HerdLoan& row : feasible_herds(spec, limit)) {
        Json item = Json::object();
        item["herd"] = nat_json(row.herd);
        item["loan"] = nat_json(row.loan);
        rows.push_back(std::move(item));
    }
    doc["herds"] = std::move(rows);
    emit(doc);
    return kSuccess;
}

int cmd_breakdown(const std::string& divisors, const std::string& herd_text, const Emitter& emit) {
    const ShareSpec spec = validate_spec(parse_divisors(divisors));
    const Nat herd = parse_nat(herd_text, "herd");
    const FractionalBreakdown bd = fractional_breakdown(spec, herd);
    Json doc = spec_header(spec);
    doc["herd"] = nat_json(herd);
    doc["feasible"] = !bd.topups.empty();
    doc["raw_shares"] = rationals_json(bd.raw_shares);
    doc["leftover"] = rational_json(bd.leftover);
    doc["topups"] = rationals_json(bd.topups);
    emit(doc);
    return kSuccess;
}

int cmd_explain(const std::string& divisors, const std::string& herd_text, const Emitter& emit,
                std::ostream& err) {
    const ShareSpec spec = validate_spec(parse_divisors(divisors));
    const Nat herd = parse_nat(herd_text, "herd");
    const SolveResult result = solve(spec, herd);
    if (const auto* diag = std::get_if<Infeasible>(&result)) {
        report_infeasible(*diag, err);
        return kInfeasible;
    }
    const auto& sol = std::get<LoanSolution>(result);
    Json doc = spec_header(spec);
    doc["herd"] = nat_json(herd);
    add_solution(doc, sol);
    Json steps = Json::array();
    for (const NarrationStep& step : explain(sol)) {
        Json item = Json::object();
        item["kind"] = std::string(to_string(step.kind));
        item["text"] = step.text;
        steps.push_back(std::move(item));
    }
    doc["steps"] = std::move(steps);
    emit(doc);
    return kSuccess;
}

int cmd_generate(std::uint64_t heirs, std::uint64_t max_divisor,
                 const std::optional<std::string>& max_loan, bool duplicates,
                 const Emitter& emit) {
    SearchBounds bounds;
    bounds.heirs = heirs;
    bounds.max_divisor = max_divisor;
    if (max_loan)
        bounds.max_loan = parse_nat(*max_loan, "max loan");
    bounds.allow_duplicates = duplicates;
    const auto puzzles = enumerate_specs(bounds);

    Json doc = Json::object();
    doc["heirs"] = std::to_string(heirs);
    doc["max_divisor"] = std::to_string(max_divisor);
    doc["max_loan"] = max_loan ? Json(bounds.max_loan->str()) : Json(nullptr);
    doc["duplicates"] = duplicates;
    Json rows = Json::array();
    for (const PuzzleRecord& p : puzzles) {
        Json item = Json::object();
        item["divisors"] = nats_json(p.divisors);
        item["r"] = nat_json(p.r);
        item["m"] = nat_json(p.m);
        item["herd"] = nat_json(p.minimal_herd);
        item["loan"] = nat_json(p.minimal_loan);
        rows.push_back(std::move(item));
    }
    doc["puzzles"] = std::move(rows);
    emit(doc);
    return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Borrowed-unit fair division: solve, analyze and generate puzzles", "fairshare"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string divisors;
    std::string herd;
    std::string limit;

    auto* check = app.add_subcommand("check", "Validate a divisor list and show its share sum");
    check->add_option("--divisors", divisors, "Comma-separated divisors")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Find the loan and integer shares for a herd");
    solve_cmd->add_option("--divisors", divisors, "Comma-separated divisors")->required();
    solve_cmd->add_option("--herd", herd, "Herd size")->required();

    auto* herds = app.add_subcommand("herds", "List feasible herds up to a limit");
    herds->add_option("--divisors", divisors, "Comma-separated divisors")->required();
    herds->add_option("--limit", limit, "Largest herd to list")->required();

    auto* breakdown = app.add_subcommand("breakdown", "Exact fractional shares, leftover and top-ups");
    breakdown->add_option("--divisors", divisors, "Comma-separated divisors")->required();
    breakdown->add_option("--herd", herd, "Herd size")->required();

    auto* explain_cmd = app.add_subcommand("explain", "Narrate the borrow, divide and return steps");
    explain_cmd->add_option("--divisors", divisors, "Comma-separated divisors")->required();
    explain_cmd->add_option("--herd", herd, "Herd size")->required();

    std::uint64_t heirs = 0;
    std::uint64_t max_divisor = 0;
    std::optional<std::string> max_loan;
    bool duplicates = false;
    auto* generate = app.add_subcommand("generate", "Enumerate puzzles within bounds");
    generate->add_option("--heirs", heirs, "Number of heirs")->required();
    generate->add_option("--max-divisor", max_divisor, "Largest divisor")->required();
    generate->add_option("--max-loan", max_loan, "Largest minimal loan");
    generate->add_flag("--duplicates", duplicates, "Allow repeated divisors");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    const Emitter emit{format == "json", out};
    try {
        if (*check)
            return cmd_check(divisors, emit);
        if (*solve_cmd)
            return cmd_solve(divisors, herd, emit, err);
        if (*herds)
            return cmd_herds(divisors, limit, emit);
        if (*breakdown)
            return cmd_breakdown(divisors, herd, emit);
        if (*explain_cmd)
            return cmd_explain(divisors, herd, emit, err);
        if (*generate)
            return cmd_generate(heirs, max_divisor, max_loan, duplicates, emit);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    err << "error: no subcommand\n";
    return kInvalidInput;
}

}  // namespace fairshare::cli
