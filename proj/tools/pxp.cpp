// Command-line driver: builds point configurations in P^1 x P^1, their
// ideals and symbolic powers, and runs the comparison experiments.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pxp/report.hpp"
#include "pxp/scorecard.hpp"

namespace {

using namespace pxp;

struct Options {
    std::string partition;
    std::string diagram_path;
    std::string coords_path;
    std::string field = "32003";
    std::string order = "degrevlex";
    std::string format = "table";
    std::string family = "i";
    int m = 3;
    int max_points = 10;
    int jobs = 2;
    bool symbolic_table = false;
    bool relaxed = false;
    std::string command;
};

std::vector<std::pair<int, int>> parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open diagram file: " + path);
    std::vector<std::pair<int, int>> pts;
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        std::size_t comma = tok.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("diagram entries are i,j pairs; got '" + tok + "'");
        try {
            pts.emplace_back(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
        } catch (const std::exception&) {
            throw InvalidInput("bad diagram entry '" + tok + "'");
        }
    }
    if (pts.empty()) throw InvalidInput("diagram file has no points: " + path);
    return pts;
}

std::pair<std::vector<P1Point>, std::vector<P1Point>> parse_coords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open coordinates file: " + path);
    std::vector<std::vector<P1Point>> axes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<P1Point> pts;
        std::string tok;
        while (ls >> tok) pts.push_back(P1Point::parse(tok));
        if (!pts.empty()) axes.push_back(std::move(pts));
    }
    if (axes.size() != 2)
        throw InvalidInput("coordinates file needs two lines: row points, then column points");
    return {axes[0], axes[1]};
}

PointConfiguration load_config(const Options& opt) {
    bool have_partition = !opt.partition.empty();
    bool have_diagram = !opt.diagram_path.empty();
    if (have_partition == have_diagram)
        throw InvalidInput("provide exactly one of --partition and --diagram");
    PointConfiguration X = have_partition
        ? PointConfiguration::from_partition(Partition::parse(opt.partition))
        : PointConfiguration::from_points(parse_diagram_file(opt.diagram_path));
    if (!opt.coords_path.empty()) {
        auto [rows, cols] = parse_coords_file(opt.coords_path);
        X = X.with_coords(std::move(rows), std::move(cols));
    }
    return X;
}

void emit(const Options& opt, const json& j, const std::string& table) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

template <class K>
json generators_json(const std::vector<Polynomial<K>>& gens) {
    json arr = json::array();
    for (const auto& g : gens) {
        json e;
        e["poly"] = g.str();
        e["bidegree"] = to_json(g.bidegree());
        arr.push_back(std::move(e));
    }
    return arr;
}

template <class K>
std::string generators_table(const std::string& title, const std::vector<Polynomial<K>>& gens) {
    std::ostringstream os;
    os << title << " (" << gens.size() << "):\n";
    for (const auto& g : gens) os << "  " << g.bidegree().str() << "  " << g.str() << "\n";
    return os.str();
}

int run_acm(const Options& opt) {
    PointConfiguration X = load_config(opt);
    AcmVerdict verdict = is_acm(X);
    json j;
    j["acm"] = verdict.acm;
    std::ostringstream table;
    if (verdict.acm) {
        FerrersLabeling L = partition_of(X);
        PointConfiguration F = X.permuted(L.row_order, L.col_order);
        j["partition"] = L.partition.str();
        j["row-order"] = L.row_order;
        j["col-order"] = L.col_order;
        table << "ACM: yes\npartition: " << L.partition.str() << "\n";
        table << "input diagram:\n" << ascii_diagram(X);
        table << "relabeled (rows/columns sorted by point count):\n" << ascii_diagram(F);
        if (opt.format == "diagram") {
            std::cout << ascii_diagram(F);
            return 0;
        }
    } else {
        auto [p, q] = *verdict.violation;
        j["violation"] = {{p.first, p.second}, {q.first, q.second}};
        table << "ACM: no\nviolating pair: (" << p.first << "," << p.second << ") and ("
              << q.first << "," << q.second << "); neither completion point is present\n";
        table << "input diagram:\n" << ascii_diagram(X);
    }
    emit(opt, j, table.str());
    return 0;
}

template <class K>
int run_ideal(const Options& opt) {
    PointConfiguration X = load_config(opt);
    Ideal<K> I = defining_ideal<K>(X);
    TermOrder ord = parse_order(opt.order);
    json j;
    j["field"] = K::name();
    j["generators"] = generators_json(I.generators());
    j["reduced-basis"] = generators_json(I.groebner_basis(ord));
    j["order"] = ord.name();
    emit(opt, j,
         generators_table("generators of I(X)", I.generators()) +
             generators_table("reduced basis, " + ord.name(), I.groebner_basis(ord)));
    return 0;
}

template <class K>
int run_power(const Options& opt, bool symbolic) {
    PointConfiguration X = load_config(opt);
    TermOrder ord = parse_order(opt.order);
    Ideal<K> I = symbolic ? symbolic_power<K>(X, opt.m)
                          : ideal_power(defining_ideal<K>(X), opt.m);
    std::string title = symbolic ? "I(X)^(" + std::to_string(opt.m) + ")"
                                 : "I(X)^" + std::to_string(opt.m);
    json j;
    j["field"] = K::name();
    j["m"] = opt.m;
    j["symbolic"] = symbolic;
    j["generators"] = generators_json(I.generators());
    j["reduced-basis"] = generators_json(I.groebner_basis(ord));
    j["order"] = ord.name();
    emit(opt, j,
         generators_table("generators of " + title, I.generators()) +
             generators_table("reduced basis, " + ord.name(), I.groebner_basis(ord)));
    return 0;
}

template <class K>
int run_compare(const Options& opt) {
    PointConfiguration X = load_config(opt);
    ComparisonReport rep = compare_powers<K>(X, opt.m);
    emit(opt, to_json(rep), comparison_table(rep));
    return 0;
}

template <class K>
int run_hilbert(const Options& opt) {
    PointConfiguration X = load_config(opt);
    Ideal<K> I = opt.symbolic_table ? symbolic_power<K>(X, opt.m)
                                    : (opt.m == 1 ? defining_ideal<K>(X)
                                                  : ideal_power(defining_ideal<K>(X), opt.m));
    Bidegree bound = default_table_bound(I);
    HilbertTable table = build_hilbert_table(I, bound);
    json j;
    j["field"] = K::name();
    j["m"] = opt.m;
    j["symbolic"] = opt.symbolic_table;
    j["bound"] = to_json(bound);
    json cells = json::array();
    for (int a = 0; a <= bound.x; ++a)
        for (int b = 0; b <= bound.y; ++b) {
            auto [di, dq] = table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            json cell;
            cell["bidegree"] = to_json(Bidegree{a, b});
            cell["ideal"] = di;
            cell["quotient"] = dq;
            cells.push_back(std::move(cell));
        }
    j["cells"] = std::move(cells);
    emit(opt, j, hilbert_table_text(table, false) + hilbert_table_text(table, true));
    return 0;
}

template <class K>
int run_completion(const Options& opt) {
    PointConfiguration X = load_config(opt);
    CompletionSchemes<K> cs = completion_schemes<K>(X);
    std::vector<Polynomial<K>> forms = completion_generator_forms<K>(X);
    auto seps = completion_separator_forms<K>(X);
    Polynomial<K> last = completion_last_separator<K>(X);
    bool forms_ok = ideal_equal(Ideal<K>(forms), cs.completion);
    bool seps_ok =
        ideal_equal(ideal_sum(Ideal<K>(forms), Ideal<K>({seps[0], seps[1]})), cs.intermediate);
    bool last_ok = ideal_equal(
        ideal_sum(ideal_sum(Ideal<K>(forms), Ideal<K>({seps[0], seps[1]})), Ideal<K>({last})),
        cs.triple);
    json j;
    j["field"] = K::name();
    j["corner"] = {cs.extra_point.first, cs.extra_point.second};
    j["completion"] = generators_json(cs.completion.groebner_basis());
    j["intermediate"] = generators_json(cs.intermediate.groebner_basis());
    j["triple"] = generators_json(cs.triple.groebner_basis());
    j["closed-forms"] = generators_json(forms);
    j["closed-forms-generate"] = forms_ok;
    j["separators-generate"] = seps_ok;
    j["last-separator-generates"] = last_ok;
    std::ostringstream table;
    table << "missing rectangle corner: (" << cs.extra_point.first << "," << cs.extra_point.second
          << ")\n";
    table << generators_table("closed-form generators of the completion", forms);
    table << "closed forms generate the completion ideal: " << (forms_ok ? "yes" : "NO") << "\n";
    table << "with separator pair, the corner drops to a simple point: " << (seps_ok ? "yes" : "NO")
          << "\n";
    table << "with the last separator, the corner disappears: " << (last_ok ? "yes" : "NO") << "\n";
    table << generators_table("reduced basis of the triple symbolic power",
                              cs.triple.groebner_basis());
    emit(opt, j, table.str());
    return 0;
}

template <class K>
int run_witness(const Options& opt) {
    PointConfiguration X = load_config(opt);
    WitnessFamily family;
    if (opt.family == "i")
        family = WitnessFamily::TailStaircase;
    else if (opt.family == "ii")
        family = WitnessFamily::RectangleStaircase;
    else
        throw InvalidInput("--family must be i or ii");
    Ideal<K> S3 = symbolic_power<K>(X, 3);
    Ideal<K> P3 = ideal_power(defining_ideal<K>(X), 3);
    WitnessForm<K> w = witness_form<K>(X, family, &S3);
    bool outside = !P3.contains(w.form);
    json j;
    j["field"] = K::name();
    j["family"] = opt.family;
    j["witness"] = w.form.str();
    j["bidegree"] = to_json(w.degree);
    j["diagonal-form"] = w.diagonal.str();
    j["in-symbolic-cube"] = true;
    j["outside-cube"] = outside;
    std::ostringstream table;
    table << "witness form of bidegree " << w.degree.str() << ":\n  " << w.form.str() << "\n";
    table << "diagonal (1,1)-factor: " << w.diagonal.str() << "\n";
    table << "lies in I(X)^(3): yes\nlies in I(X)^3: " << (outside ? "no" : "YES (unexpected)")
          << "\n";
    emit(opt, j, table.str());
    return outside ? 0 : 1;
}

template <class K>
int run_sweep(const Options& opt) {
    SweepReport rep = conjecture_sweep<K>(opt.max_points, opt.m, opt.jobs);
    emit(opt, to_json(rep), sweep_table(rep));
    return 0;
}

template <class K>
int run_paper_check(const Options& opt) {
    ScorecardOptions sopts;
    sopts.max_points = opt.max_points;
    sopts.jobs = opt.jobs;
    sopts.enforce_budgets = !opt.relaxed;
    auto results = run_scorecard<K>(sopts);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            json e;
            e["id"] = r.id;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            e["wall-time-ms"] = r.millis;
            arr.push_back(std::move(e));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << scorecard_lines(results);
    }
    return scorecard_all_pass(results) ? 0 : 1;
}

template <class K>
int dispatch(const Options& opt) {
    if (opt.command == "ideal") return run_ideal<K>(opt);
    if (opt.command == "power") return run_power<K>(opt, false);
    if (opt.command == "symbolic") return run_power<K>(opt, true);
    if (opt.command == "compare") return run_compare<K>(opt);
    if (opt.command == "hilbert") return run_hilbert<K>(opt);
    if (opt.command == "completion") return run_completion<K>(opt);
    if (opt.command == "witness") return run_witness<K>(opt);
    if (opt.command == "sweep") return run_sweep<K>(opt);
    if (opt.command == "paper-check") return run_paper_check<K>(opt);
    throw InvalidInput("unknown command " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"ideals of point configurations in P^1 x P^1: powers vs symbolic powers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--partition", opt.partition, "partition, e.g. 6,5,3,1,1");
    app.add_option("--diagram", opt.diagram_path, "file of whitespace-separated i,j lattice pairs");
    app.add_option("--coords", opt.coords_path,
                   "file with two lines of [a:b] points: row coordinates, column coordinates");
    app.add_option("--m", opt.m, "power exponent");
    app.add_option("--max-points", opt.max_points, "partition size bound");
    app.add_option("--field", opt.field, "coefficient field: a prime p, or q for the rationals");
    app.add_option("--order", opt.order, "term order: degrevlex or lex");
    app.add_option("--format", opt.format, "output: table, json, or diagram")
        ->check(CLI::IsMember({"table", "json", "diagram"}));
    app.add_option("--jobs", opt.jobs, "parallel workers for the sweep");

    app.add_subcommand("acm", "decide the completion property and relabel to Ferrers form");
    app.add_subcommand("ideal", "minimal generators and reduced basis of I(X)");
    app.add_subcommand("power", "ordinary power I(X)^m");
    app.add_subcommand("symbolic", "symbolic power I(X)^(m)");
    app.add_subcommand("compare", "decide I(X)^(m) = I(X)^m with a witness on inequality");
    auto* hilbert_cmd = app.add_subcommand("hilbert", "bigraded Hilbert table of I(X)^m");
    hilbert_cmd->add_flag("--symbolic", opt.symbolic_table, "use the symbolic power");
    app.add_subcommand("completion", "nested scheme triple for partitions (a,..,a,a-1)");
    auto* witness_cmd = app.add_subcommand("witness", "explicit form in I^(3) outside I^3");
    witness_cmd->add_option("--family", opt.family, "witness family: i or ii");
    app.add_subcommand("sweep", "compare all partitions up to --max-points");
    auto* paper_cmd =
        app.add_subcommand("paper-check", "run the golden reproduction suite and print a scorecard");
    paper_cmd->add_flag("--relaxed", opt.relaxed, "do not enforce the per-check time budgets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        if (opt.command == "acm") return run_acm(opt);
        if (opt.field == "q" || opt.field == "Q") return dispatch<pxp::Rational>(opt);
        pxp::Fp::set_modulus(std::stoull(opt.field));
        return dispatch<pxp::Fp>(opt);
    } catch (const pxp::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pxp::InvalidInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const pxp::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
