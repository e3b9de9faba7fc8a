// isoclinic: point counts of braid stacks and their minimal unipotent classes.
//
// Exit codes: 0 success, 1 usage error or a failed cross-check,
// 2 data asset or computational tier unavailable.

#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "isoclinic/report.hpp"

using namespace isoc;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string type;
    std::string word;
    int power = 1;
    std::string slope;
    int gl = 0;
    int q = 2;
    std::string format = "table";
    std::string data_dir;
    int jobs = 0;
    std::string cls;
};

std::string resolve_type(const Options& o) {
    std::string t = o.type;
    t.erase(std::remove(t.begin(), t.end(), '_'), t.end());
    if (o.gl) {
        std::string a = "A" + std::to_string(o.gl - 1);
        if (!t.empty() && t != a) throw UsageError("--gl " + std::to_string(o.gl) + " means type " + a);
        return a;
    }
    if (t.empty()) throw UsageError("--type or --gl is required");
    return t;
}

BraidSpec resolve_braid(const Options& o) {
    if (o.slope.empty() == o.word.empty()) throw UsageError("give exactly one of --slope or --word");
    if (!o.slope.empty()) return BraidSpec::springer(Slope::parse(o.slope));
    return BraidSpec::general(parse_word(o.word), o.power);
}

int jobs_of(const Options& o) {
    if (o.jobs > 0) return o.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

void add_common(CLI::App* sub, Options& o, bool braid) {
    sub->add_option("--type", o.type, "root system: A1..A6, G2, F4, E6");
    sub->add_option("--gl", o.gl, "type A as GL_n")->check(CLI::Range(2, 7));
    sub->add_option("--format", o.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--data-dir", o.data_dir, "data asset directory (default $ISOCLINIC_DATA)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    if (braid) {
        sub->add_option("--slope", o.slope, "Springer slope d/m");
        sub->add_option("--word", o.word, "positive braid word, e.g. 1,2,1,2");
        sub->add_option("--power", o.power, "power of the word")->check(CLI::NonNegativeNumber);
    }
}

json filter_class(json r, const Options& o, const TypeContext& ctx) {
    if (o.cls.empty()) return r;
    int c = ctx.ud.class_index(o.cls);
    r["rows"] = json::array({r["rows"][c]});
    r["values"] = json::array({r["values"][c]});
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts of braid stacks over unipotent classes"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "count points over every unipotent class");
    add_common(count, o, true);
    count->add_option("--class", o.cls, "only this class");
    auto* interval = app.add_subcommand("interval", "minimal and regular class of the support");
    add_common(interval, o, true);
    auto* count_min = app.add_subcommand("count-min", "count over the minimal class of a slope");
    add_common(count_min, o, true);
    auto* springer = app.add_subcommand("springer", "regular numbers and root elements");
    add_common(springer, o, false);
    auto* oracle = app.add_subcommand("oracle", "brute-force flag count over F_q against the formula");
    add_common(oracle, o, true);
    oracle->add_option("--q", o.q, "field size")->check(CLI::IsMember({2, 3}));
    auto* validate = app.add_subcommand("validate-data", "check a bundled data asset");
    add_common(validate, o, false);
    auto* coxeter = app.add_subcommand("coxeter", "N_d Jordan types against minimal classes in GL_n");
    add_common(coxeter, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        json report;
        int rc = 0;
        if (count->parsed() || interval->parsed() || count_min->parsed()) {
            std::string label = resolve_type(o);
            BraidSpec spec = resolve_braid(o);
            auto ctx = make_context(label, o.gl > 0, o.data_dir);
            if (count->parsed()) {
                report = filter_class(count_report(*ctx, spec), o, *ctx);
            } else if (interval->parsed()) {
                report = interval_report(*ctx, spec);
            } else {
                if (!spec.slope) throw UsageError("count-min needs --slope");
                report = count_min_report(*ctx, *spec.slope);
            }
        } else if (springer->parsed()) {
            report = springer_report(resolve_type(o), jobs_of(o));
        } else if (oracle->parsed()) {
            if (!o.gl) throw UsageError("oracle needs --gl n with 2 <= n <= 4");
            if (o.gl > 4) throw UsageError("oracle supports n <= 4");
            report = oracle_report(o.gl, o.q, resolve_braid(o), jobs_of(o));
            rc = report["ok"].get<bool>() ? 0 : 1;
        } else if (validate->parsed()) {
            std::string label = resolve_type(o);
            RootSystem rs = RootSystem::build(label);
            if (rs.family() == 'A') throw UsageError("type A data is computed, not loaded");
            report = validate_report(label, o.data_dir);
            rc = report["ok"].get<bool>() ? 0 : 2;
        } else if (coxeter->parsed()) {
            std::string label = resolve_type(o);
            if (label[0] != 'A') throw TierUnavailable("the Coxeter check covers GL_n only");
            int n = std::stoi(label.substr(1)) + 1;
            report = coxeter_report(n, jobs_of(o));
            rc = report["ok"].get<bool>() ? 0 : 1;
        }
        std::cout << render(report, o.format);
        return rc;
    } catch (const TierUnavailable& e) {
        std::cerr << "unavailable: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
