// cherednik: command-line front end.

#include "cherednik/centre.hpp"
#include "cherednik/error.hpp"
#include "cherednik/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace cherednik;

namespace {

struct Options {
    std::string format = "text";
    std::string out;
    std::string input;
    std::string mode;
    int ell = 1;
    int n = 0;
    bool raw = false;
    bool simplified = false;
    bool deep = false;
    bool check = false;
    int n_max = 5;
};

std::string join(const std::vector<int> &v, const char *sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

Json ints(const std::vector<int> &v) { return Json(v); }

// A label for --ell l > 1: either "a|b|..." directly, or a partition with
// trivial l-core standing for its quotient.
MultiPartition wreath_label(const std::string &text, int ell)
{
    if (text.find('|') != std::string::npos)
        return parse_multipartition(text);
    const Partition lambda = parse_partition(text);
    if (!has_trivial_core(lambda, ell))
        throw Error(ErrorKind::LengthMismatch, to_string(lambda) + " has non-trivial " + std::to_string(ell) + "-core");
    return ell_quotient(lambda, ell);
}

GradedPresentation presentation_for(const Options &o)
{
    GradedPresentation p = o.ell == 1 ? direct_presentation(parse_partition(o.input))
                                      : wreath_presentation(wreath_label(o.input, o.ell), o.ell);
    return o.simplified ? simplify(p) : p;
}

void partition_info(const Options &o, std::ostream &text, Json &json)
{
    const Partition lambda = parse_partition(o.input);
    std::vector<std::vector<int>> hooks;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= lambda.part(i); ++j)
            row.push_back(hook_length(lambda, {i, j}));
        hooks.push_back(row);
    }
    const auto beta = beta_set(lambda, lambda.size()).values;
    const Partition t = transpose(lambda);
    text << "partition " << to_string(lambda) << " of " << lambda.size() << "\n";
    for (const auto &row : hooks)
        text << "  " << join(row, " ") << "\n";
    text << "beta-set " << join(beta) << "\n";
    text << "transpose " << to_string(t) << "\n";
    text << "dimension " << dimension_hook_formula(lambda).get_str() << "\n";
    json = {{"partition", to_string(lambda)},
            {"size", lambda.size()},
            {"hooks", hooks},
            {"beta_set", ints(beta)},
            {"transpose", to_string(t)},
            {"dimension", dimension_hook_formula(lambda).get_str()}};
}

void abacus(const Options &o, std::ostream &text, Json &json)
{
    if (o.mode == "compose") {
        const MultiPartition q = parse_multipartition(o.input);
        const Partition lambda = from_quotient(q, o.ell);
        text << to_string(lambda) << "\n";
        json = {{"quotient", to_string(q)}, {"ell", o.ell}, {"partition", to_string(lambda)},
                {"beads", ints(abacus_from_partition(lambda, o.ell).beads)}};
        return;
    }
    const Partition lambda = parse_partition(o.input);
    const Partition core = ell_core(lambda, o.ell);
    const MultiPartition q = ell_quotient(lambda, o.ell);
    if (o.mode == "core")
        text << to_string(core) << "\n";
    else
        text << to_string(q) << "\n" << "core " << to_string(core) << "\n";
    json = {{"partition", to_string(lambda)}, {"ell", o.ell}, {"core", to_string(core)},
            {"quotient", to_string(q)}, {"beads", ints(abacus_from_partition(lambda, o.ell).beads)}};
}

void presentation(const Options &o, std::ostream &text, Json &json)
{
    const auto p = presentation_for(o);
    text << to_string(p) << "\n";
    json = to_json(p);
}

void wronskian_cmd(const Options &o, std::ostream &text, Json &json)
{
    const Partition lambda = parse_partition(o.input);
    const auto basis = schubert_basis(lambda);
    const MPoly w = wronskian(basis, Execution::parallel);
    const auto rel = wronski_relations(lambda, Execution::parallel);
    for (std::size_t i = 0; i < basis.polys.size(); ++i)
        text << "f" << i + 1 << " = " << to_string(basis.polys[i]) << "\n";
    text << "Wr = " << to_string(w) << "\n";
    for (std::size_t s = 0; s < rel.relations.size(); ++s)
        text << "r" << s + 1 << " = " << to_string(rel.relations[s]) << "\n";
    json = to_json(rel);
    json["partition"] = to_string(lambda);
    json["wronskian"] = to_json(w);
    Json polys = Json::array();
    for (const auto &f : basis.polys)
        polys.push_back(to_string(f));
    json["basis"] = polys;
}

void hilbert(const Options &o, std::ostream &text, Json &json)
{
    if (o.ell == 1) {
        const Partition lambda = parse_partition(o.input);
        const auto formula = hilbert_series_formula(lambda);
        text << to_string(formula) << "\n";
        text << "dimension " << dimension_hook_formula(lambda).get_str() << "\n";
        json = {{"partition", to_string(lambda)},
                {"ell", 1},
                {"series", to_json(formula)},
                {"dimension", dimension_hook_formula(lambda).get_str()}};
        if (o.check) {
            const auto oracle = graded_dimensions_from_presentation(simplify(direct_presentation(lambda)),
                                                                    default_max_degree(lambda), Execution::parallel);
            text << "oracle " << (oracle == formula ? "agrees" : "DISAGREES: " + to_string(oracle)) << "\n";
            json["oracle"] = to_json(oracle);
        }
        return;
    }
    const MultiPartition q = wreath_label(o.input, o.ell);
    const auto h = graded_dimensions(simplify(wreath_presentation(q, o.ell)), Execution::parallel);
    text << to_string(h) << "\n" << "dimension " << h.total().get_str() << "\n";
    json = {{"label", to_string(q)}, {"ell", o.ell}, {"series", to_json(h)}, {"dimension", h.total().get_str()}};
}

void centre(const Options &o, std::ostream &text, Json &json)
{
    const auto c = centre_presentation(o.n, o.ell, o.simplified, Execution::parallel);
    text << "centre for n=" << c.n << " l=" << c.ell << " (generic c)\n";
    for (const auto &b : c.blocks) {
        text << "[" << to_string(b.label) << "] ";
        if (b.star_label)
            text << "star " << to_string(*b.star_label) << " ";
        text << "dim " << b.dimension.get_str() << ": " << to_string(b.minus) << " (x) " << to_string(b.plus) << "\n";
    }
    text << "total dimension " << c.total_dimension.get_str() << "\n";
    json = to_json(c);
}

bool selftest(const Options &o, std::ostream &text, Json &json)
{
    const int n_max = o.deep ? std::max(o.n_max, 7) : o.n_max;
    int checked = 0;
    Json failures = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const auto p = direct_presentation(lambda);
            const auto w = wronski_relations(lambda, Execution::parallel);
            bool ok = p.relations.size() == w.relations.size();
            for (std::size_t s = 0; ok && s < w.relations.size(); ++s)
                ok = p.relations[s].poly == w.relations[s];
            const auto formula = hilbert_series_formula(lambda);
            ok = ok && graded_dimensions_from_presentation(simplify(p), default_max_degree(lambda), Execution::parallel) ==
                           formula;
            ok = ok && formula.total() == dimension_hook_formula(lambda);
            ++checked;
            if (!ok)
                failures.push_back(to_string(lambda));
        }
        text << "n=" << n << " " << (failures.empty() ? "ok" : "FAILED") << "\n";
    }
    text << checked << " partitions checked, " << failures.size() << " failed\n";
    json = {{"n_max", n_max}, {"checked", checked}, {"failures", failures}};
    return failures.empty();
}

void write_atomic(const std::string &path, const std::string &content)
{
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary);
        f << content;
        if (!f.flush())
            throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Presentations of centres of restricted rational Cherednik algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", o.out, "write output to a file");

    auto *part = app.add_subcommand("partition", "partition combinatorics");
    auto *info = part->add_subcommand("info", "hooks, beta-set and transpose");
    info->add_option("partition", o.input)->required();
    part->require_subcommand(1);

    auto *ab = app.add_subcommand("abacus", "cores and quotients");
    ab->require_subcommand(1);
    for (const char *mode : {"core", "quotient", "compose"}) {
        auto *s = ab->add_subcommand(mode, std::string(mode == std::string("compose") ? "partition from a quotient"
                                                                                       : std::string("l-") + mode));
        s->add_option("input", o.input)->required();
        s->add_option("--ell", o.ell)->required()->check(CLI::PositiveNumber);
        s->callback([&o, mode] { o.mode = mode; });
    }

    auto *pres = app.add_subcommand("presentation", "graded presentation of A(lambda)^+");
    pres->add_option("label", o.input, "partition, or a|b|.. with --ell")->required();
    pres->add_option("--ell", o.ell)->check(CLI::PositiveNumber);
    auto *raw = pres->add_flag("--raw", o.raw, "unsimplified relations (default)");
    pres->add_flag("--simplified", o.simplified)->excludes(raw);

    auto *wr = app.add_subcommand("wronskian", "symbolic Wronskian of the Schubert basis");
    wr->add_option("partition", o.input)->required();

    auto *hs = app.add_subcommand("hilbert", "Hilbert series");
    hs->add_option("label", o.input)->required();
    hs->add_option("--ell", o.ell)->check(CLI::PositiveNumber);
    hs->add_flag("--check", o.check, "also compute the graded dimensions from the presentation");

    auto *ce = app.add_subcommand("centre", "centre as a sum of blocks");
    ce->add_option("n", o.n)->required()->check(CLI::NonNegativeNumber);
    ce->add_option("--ell", o.ell)->check(CLI::PositiveNumber);
    ce->add_flag("--simplified", o.simplified);

    auto *st = app.add_subcommand("selftest", "oracle equivalence suite");
    st->add_option("n-max", o.n_max)->check(CLI::PositiveNumber);
    st->add_flag("--deep", o.deep, "raise the bound to 7");

    for (auto *s : {part, ab, pres, wr, hs, ce, st})
        s->fallthrough();
    info->fallthrough();
    for (auto *s : ab->get_subcommands({}))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::ostringstream text;
    Json json;
    bool ok = true;
    try {
        if (*part)
            partition_info(o, text, json);
        else if (*ab)
            abacus(o, text, json);
        else if (*pres)
            presentation(o, text, json);
        else if (*wr)
            wronskian_cmd(o, text, json);
        else if (*hs)
            hilbert(o, text, json);
        else if (*ce)
            centre(o, text, json);
        else if (*st)
            ok = selftest(o, text, json);
        const std::string output = o.format == "json" ? dump(json) : text.str();
        if (o.out.empty())
            std::cout << output;
        else
            write_atomic(o.out, output);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return ok ? 0 : 1;
}
