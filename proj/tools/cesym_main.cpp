#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cesym/report.hpp"

namespace {

cesym::AlgebraFile load_input(const std::string& input) {
    if (cesym::is_builtin(input)) return cesym::builtin_file(input);
    std::ifstream in(input);
    if (!in) throw cesym::ParseError("cannot read input '" + input + "' (not a built-in name "
                                     "or readable file; see `cesym examples list`)");
    std::ostringstream text;
    text << in.rdbuf();
    return cesym::parse_algebra_file(text.str());
}

int run(const std::string& command, const std::string& input, bool invariant, bool json_out,
        std::uint64_t seed) {
    const cesym::AlgebraFile file = load_input(input);
    const cesym::json rep = cesym::run_report(file, {command, invariant, seed});
    if (json_out)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << cesym::render_report(rep);
    return 0;
}

int run_examples(const std::string& action, const std::string& name, bool json_out) {
    if (action == "list") {
        if (json_out) {
            cesym::json arr = cesym::json::array();
            for (const auto& n : cesym::builtin_names()) {
                const auto f = cesym::builtin_file(n);
                cesym::json e = cesym::json::object();
                e["name"] = n;
                e["dimension"] = f.generators.size();
                e["description"] = f.metadata.value("description", "");
                arr.push_back(std::move(e));
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& n : cesym::builtin_names()) {
                const auto f = cesym::builtin_file(n);
                std::cout << n << std::string(n.size() < 14 ? 14 - n.size() : 1, ' ')
                          << f.metadata.value("description", "") << "\n";
            }
        }
        return 0;
    }
    if (action == "show") {
        if (name.empty()) throw cesym::ParseError("examples show: missing built-in name");
        std::cout << cesym::serialize_algebra_file(cesym::builtin_file(name)).dump(2) << "\n";
        return 0;
    }
    throw cesym::ParseError("examples: unknown action '" + action + "' (expected list or show)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic decision for invariant Chevalley-Eilenberg complexes"};
    app.require_subcommand(1);

    std::string input, ex_action, ex_name;
    bool invariant = false, json_out = false;
    std::uint64_t seed = 20250816;

    const char* input_help = "built-in name or path to an algebra JSON file";
    const char* invariant_help = "work on the fixed subcomplex of the action generators";
    const char* json_help = "emit the machine-readable JSON report";
    const char* seed_help = "RNG seed for the witness sampling fast path (verdicts are "
                            "seed-independent)";

    auto* validate = app.add_subcommand("validate", "check Jacobi, d^2 = 0 and equivariance");
    validate->add_option("input", input, input_help)->required();
    validate->add_flag("--json", json_out, json_help);

    auto* betti = app.add_subcommand("betti", "per-degree Betti numbers of the complex");
    betti->add_option("input", input, input_help)->required();
    betti->add_flag("--invariant", invariant, invariant_help);
    betti->add_flag("--json", json_out, json_help);

    auto* symplectic =
        app.add_subcommand("symplectic", "decide existence of a symplectic form, with "
                                         "an exact witness or a symbolic proof");
    symplectic->add_option("input", input, input_help)->required();
    symplectic->add_flag("--invariant", invariant, invariant_help);
    symplectic->add_option("--seed", seed, seed_help);
    symplectic->add_flag("--json", json_out, json_help);

    auto* report = app.add_subcommand("report", "run everything: validation, Betti and "
                                                "symplectic verdicts for every mode");
    report->add_option("input", input, input_help)->required();
    report->add_option("--seed", seed, seed_help);
    report->add_flag("--json", json_out, json_help);

    auto* examples = app.add_subcommand("examples", "list or show the built-in algebras");
    examples->add_option("action", ex_action, "list | show")->required();
    examples->add_option("name", ex_name, "built-in name (for show)");
    examples->add_flag("--json", json_out, json_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (examples->parsed()) return run_examples(ex_action, ex_name, json_out);
        for (const auto* cmd : {validate, betti, symplectic, report})
            if (cmd->parsed()) return run(cmd->get_name(), input, invariant, json_out, seed);
        return 1;
    } catch (const cesym::OddDimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cesym::ActionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cesym::EquivarianceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cesym::NotLiePresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cesym::JacobiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cesym::Error& e) { // ParseError, I/O, expansion refusals
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
