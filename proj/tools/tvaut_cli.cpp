// Command line front end: build the stock automata, validate files,
// apply states and elements to words, decide identity/order/commutation,
// classify, and sweep the two-state enumeration into a CSV report.
//
// Exit codes: 0 success (predicates print true/false and still exit 0),
// 2 invalid input or file, 1 when a search cap is exceeded (order beyond
// 2^max_exp, enumeration beyond the supported size).

#include <CLI11.hpp>

#include <tvaut/tvaut.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace tvaut;

struct CapExceeded {
    std::string message;
    bool print_to_stdout = false;
};

Automaton load_validated(const std::string& path) {
    Automaton a = load_automaton(path);
    ValidationReport report = validate(a);
    if (!report.ok) throw std::invalid_argument(path + ": " + report.error);
    return a;
}

Automaton load_invertible(const std::string& path) {
    Automaton a = load_validated(path);
    if (!is_invertible(a))
        throw std::invalid_argument(path + ": automaton is not invertible");
    return a;
}

void emit_automaton(const Automaton& a, const std::string& out_path) {
    if (out_path.empty())
        std::cout << to_json(a).dump(2) << '\n';
    else
        save_automaton(out_path, a);
}

int parse_pow2_order(const std::string& text) {
    if (text.rfind("2^", 0) == 0) {
        int r = std::stoi(text.substr(2));
        if (r < 1) throw std::invalid_argument("order: exponent must be >= 1");
        return r;
    }
    long long v = std::stoll(text);
    int r = 0;
    while ((1LL << r) < v) ++r;
    if (r < 1 || (1LL << r) != v)
        throw std::invalid_argument("order: " + text + " is not a power of two >= 2");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mealy and time-varying automata over finite alphabets: tree actions, "
                 "exact word problem and order decisions, abelian classification"};
    app.require_subcommand(1);

    int exit_code = 0;

    // validate FILE
    auto* validate_cmd = app.add_subcommand("validate", "check an automaton file");
    std::string validate_file;
    validate_cmd->add_option("file", validate_file, "automaton JSON")->required();
    validate_cmd->callback([&] {
        Automaton a = load_automaton(validate_file);
        ValidationReport report = validate(a);
        if (report.ok) {
            std::cout << "ok\n";
        } else {
            std::cout << report.error << '\n';
            exit_code = 2;
        }
    });

    // apply FILE --state NAME --step I --word W
    auto* apply_cmd = app.add_subcommand("apply", "apply a single state to a word");
    std::string apply_file, apply_state, apply_word;
    int apply_step = 1;
    apply_cmd->add_option("file", apply_file, "automaton JSON")->required();
    apply_cmd->add_option("--state", apply_state, "state name")->required();
    apply_cmd->add_option("--step", apply_step, "starting step (1-based)");
    apply_cmd->add_option("--word", apply_word, "input word, e.g. 0110")->required();
    apply_cmd->callback([&] {
        Automaton a = load_validated(apply_file);
        int q = a.state_index(apply_state);
        if (q < 0) throw std::invalid_argument("unknown state \"" + apply_state + "\"");
        Word w = parse_word(apply_word, a.alphabet);
        std::cout << format_word(apply(a, q, apply_step, w)) << '\n';
    });

    // image FILE --element EXPR --step I --word W
    auto* image_cmd = app.add_subcommand("image", "apply an element to a word");
    std::string image_file, image_expr, image_word;
    int image_step = 1;
    image_cmd->add_option("file", image_file, "automaton JSON")->required();
    image_cmd->add_option("--element", image_expr, "element expression, e.g. \"a1*a2^-1\"")
        ->required();
    image_cmd->add_option("--step", image_step, "starting step (1-based)");
    image_cmd->add_option("--word", image_word, "input word")->required();
    image_cmd->callback([&] {
        Automaton a = load_invertible(image_file);
        Element g = parse_element(a, image_expr, image_step);
        Word w = parse_word(image_word, a.alphabet);
        std::cout << format_word(image(g, w)) << '\n';
    });

    // identity FILE --element EXPR --step I
    auto* identity_cmd = app.add_subcommand("identity", "decide whether an element is trivial");
    std::string identity_file, identity_expr;
    int identity_step = 1;
    identity_cmd->add_option("file", identity_file, "automaton JSON")->required();
    identity_cmd->add_option("--element", identity_expr, "element expression")->required();
    identity_cmd->add_option("--step", identity_step, "starting step (1-based)");
    identity_cmd->callback([&] {
        Automaton a = load_invertible(identity_file);
        IdentityVerdict v = is_identity(parse_element(a, identity_expr, identity_step));
        if (v.is_identity)
            std::cout << "true\n";
        else
            std::cout << "false " << format_word(*v.witness) << '\n';
    });

    // order FILE --element EXPR --step I --max-exp E
    auto* order_cmd = app.add_subcommand("order", "order of an element among powers of two");
    std::string order_file, order_expr;
    int order_step = 1, order_max_exp = 12;
    order_cmd->add_option("file", order_file, "automaton JSON")->required();
    order_cmd->add_option("--element", order_expr, "element expression")->required();
    order_cmd->add_option("--step", order_step, "starting step (1-based)");
    order_cmd->add_option("--max-exp", order_max_exp, "largest tested exponent")
        ->check(CLI::Range(0, 30));
    order_cmd->callback([&] {
        Automaton a = load_invertible(order_file);
        OrderResult r = order_pow2(parse_element(a, order_expr, order_step), order_max_exp);
        if (!r.finite())
            throw CapExceeded{"exceeds 2^" + std::to_string(order_max_exp), true};
        std::cout << r.order() << '\n';
    });

    // commute FILE --element EXPR --element EXPR --step I
    auto* commute_cmd = app.add_subcommand("commute", "decide whether two elements commute");
    std::string commute_file;
    std::vector<std::string> commute_exprs;
    int commute_step = 1;
    commute_cmd->add_option("file", commute_file, "automaton JSON")->required();
    commute_cmd->add_option("--element", commute_exprs, "element expression (give twice)")
        ->required()
        ->expected(2);
    commute_cmd->add_option("--step", commute_step, "starting step (1-based)");
    commute_cmd->callback([&] {
        Automaton a = load_invertible(commute_file);
        Element g = parse_element(a, commute_exprs[0], commute_step);
        Element h = parse_element(a, commute_exprs[1], commute_step);
        std::cout << (commute(g, h) ? "true" : "false") << '\n';
    });

    // classify FILE --max-exp E --rel-bound K
    auto* classify_cmd = app.add_subcommand("classify", "identify the abelian group type");
    std::string classify_file;
    int classify_max_exp = 12, classify_bound = 3;
    classify_cmd->add_option("file", classify_file, "automaton JSON")->required();
    classify_cmd->add_option("--max-exp", classify_max_exp, "order search exponent bound")
        ->check(CLI::Range(0, 30));
    classify_cmd->add_option("--rel-bound", classify_bound, "relation search bound")
        ->check(CLI::Range(0, 6));
    classify_cmd->callback([&] {
        Automaton a = load_invertible(classify_file);
        std::cout << to_string(classify_abelian_mealy(a, classify_max_exp, classify_bound))
                  << '\n';
    });

    // enumerate --states n --max-exp E --rel-bound K [--report path] [--threads t]
    auto* enum_cmd = app.add_subcommand("enumerate", "classify every n-state binary automaton");
    int enum_states = 2, enum_max_exp = 12, enum_bound = 3, enum_threads = 1;
    std::string enum_report;
    enum_cmd->add_option("--states", enum_states, "number of states")->check(CLI::Range(1, 16));
    enum_cmd->add_option("--max-exp", enum_max_exp, "order search exponent bound")
        ->check(CLI::Range(0, 30));
    enum_cmd->add_option("--rel-bound", enum_bound, "relation search bound")
        ->check(CLI::Range(0, 6));
    enum_cmd->add_option("--report", enum_report, "CSV output path (default stdout)");
    enum_cmd->add_option("--threads", enum_threads, "worker threads")->check(CLI::Range(1, 64));
    enum_cmd->callback([&] {
        if (enum_states > 3)
            throw CapExceeded{"enumeration capped at 3 states (" +
                              std::to_string(enum_states) + " requested)"};
        std::vector<ClassifyRow> rows =
            classify_all(enum_states, 2, enum_max_exp, enum_bound, enum_threads);
        if (enum_report.empty()) {
            write_report_csv(std::cout, rows);
        } else {
            std::ofstream out(enum_report);
            if (!out) throw std::runtime_error("cannot open " + enum_report + " for writing");
            write_report_csv(out, rows);
        }
    });

    // build {cyclic|mixed|free-abelian|sausage|shift|pad}
    auto* build_cmd = app.add_subcommand("build", "construct a stock automaton");
    build_cmd->require_subcommand(1);

    auto* cyclic_cmd = build_cmd->add_subcommand("cyclic", "cyclic group time-varying automaton");
    std::string cyclic_order, cyclic_out;
    bool cyclic_infinite = false;
    auto* cyclic_order_opt =
        cyclic_cmd->add_option("--order", cyclic_order, "2^r or a power of two >= 2");
    cyclic_cmd->add_flag("--infinite", cyclic_infinite, "infinite cyclic variant")
        ->excludes(cyclic_order_opt);
    cyclic_cmd->add_option("-o,--output", cyclic_out, "output path (default stdout)");
    cyclic_cmd->callback([&] {
        if (!cyclic_infinite && cyclic_order.empty())
            throw std::invalid_argument("build cyclic: give --order or --infinite");
        std::optional<int> exponent;
        if (!cyclic_infinite) exponent = parse_pow2_order(cyclic_order);
        emit_automaton(cyclic_tva(exponent), cyclic_out);
    });

    auto* mixed_cmd = build_cmd->add_subcommand("mixed", "mixed torsion and free abelian");
    std::vector<int> mixed_torsion;
    int mixed_free = 0;
    std::string mixed_out;
    mixed_cmd->add_option("--torsion", mixed_torsion, "torsion exponents r1,r2,...")
        ->required()
        ->delimiter(',');
    mixed_cmd->add_option("--free", mixed_free, "free rank");
    mixed_cmd->add_option("-o,--output", mixed_out, "output path (default stdout)");
    mixed_cmd->callback([&] { emit_automaton(mixed_abelian_tva(mixed_torsion, mixed_free), mixed_out); });

    auto* free_cmd = build_cmd->add_subcommand("free-abelian", "free abelian time-varying");
    int free_rank = 2;
    std::string free_out;
    free_cmd->add_option("--rank", free_rank, "rank (>= 2)")->required();
    free_cmd->add_option("-o,--output", free_out, "output path (default stdout)");
    free_cmd->callback([&] { emit_automaton(free_abelian_tva(free_rank), free_out); });

    auto* sausage_cmd = build_cmd->add_subcommand("sausage", "free abelian Mealy family");
    int sausage_states = 2;
    std::string sausage_out;
    sausage_cmd->add_option("--states", sausage_states, "number of states (>= 2)")->required();
    sausage_cmd->add_option("-o,--output", sausage_out, "output path (default stdout)");
    sausage_cmd->callback([&] { emit_automaton(sausage_mealy(sausage_states), sausage_out); });

    auto* shift_cmd = build_cmd->add_subcommand("shift", "elementary abelian Mealy family");
    int shift_states = 1;
    std::string shift_out;
    shift_cmd->add_option("--states", shift_states, "number of states (>= 1)")->required();
    shift_cmd->add_option("-o,--output", shift_out, "output path (default stdout)");
    shift_cmd->callback([&] { emit_automaton(cyclic_shift_mealy(shift_states), shift_out); });

    auto* pad_cmd = build_cmd->add_subcommand("pad", "pad with trivially acting states");
    std::string pad_file, pad_out;
    int pad_states_n = 0;
    pad_cmd->add_option("file", pad_file, "automaton JSON")->required();
    pad_cmd->add_option("--states", pad_states_n, "total states after padding")->required();
    pad_cmd->add_option("-o,--output", pad_out, "output path (default stdout)");
    pad_cmd->callback([&] { emit_automaton(pad_states(load_validated(pad_file), pad_states_n), pad_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& cap) {
        if (cap.print_to_stdout)
            std::cout << cap.message << '\n';
        else
            std::cerr << "error: " << cap.message << '\n';
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
