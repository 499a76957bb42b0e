#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arrmorse/reports.hpp"
#include "arrmorse/svg.hpp"
#include "arrmorse/sweep.hpp"

using namespace arrmorse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

struct Options {
    std::string input, flag_file, out, format = "json", scalar = "auto", state;
    uint64_t seed = 0;
    long limit = 10000;
};

Flag load_or_build_flag(const Arrangement& arr, const Options& opt) {
    if (!opt.flag_file.empty()) {
        auto subs = Flag::subspaces_from_json(slurp(opt.flag_file), arr.quad_n);
        return assemble_flag(arr, subs);
    }
    return build_flag(arr, opt.seed);
}

int run(int argc, char** argv) {
    CLI::App app{"exact discrete Morse data for complexified hyperplane arrangements"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        auto* o = cmd->add_option("--input", opt.input, "arrangement JSON file");
        if (needs_input) o->required();
        cmd->add_option("--flag-file", opt.flag_file, "flag JSON file to reuse");
        cmd->add_option("--seed", opt.seed, "seed for all randomized choices");
        cmd->add_option("--limit", opt.limit, "enumeration cap / retry budget");
        cmd->add_option("--scalar", opt.scalar, "expected scalar mode (checked)");
        cmd->add_option("--out", opt.out, "output file (default: stdout)");
        cmd->add_option("--format", opt.format, "json|tsv|svg");
    };

    CLI::App* faces = app.add_subcommand("faces", "enumerate the face poset");
    CLI::App* lattice = app.add_subcommand("lattice", "intersection lattice and invariants");
    CLI::App* flag = app.add_subcommand("flag", "build and verify a general flag");
    CLI::App* sweep = app.add_subcommand("sweep", "canonical special orderings per level");
    CLI::App* polar = app.add_subcommand("polar", "combinatorial polar ordering of all faces");
    CLI::App* morse = app.add_subcommand("morse", "polar matching, critical cells, minimality");
    CLI::App* followup = app.add_subcommand("followup", "follow-up decision");
    CLI::App* ss = app.add_subcommand("supersolvable", "filtration search and ssfol pipeline");
    CLI::App* render = app.add_subcommand("render", "static SVG figure of a line arrangement");
    for (auto* cmd : {faces, lattice, flag, sweep, polar, morse, followup, ss, render})
        add_common(cmd);
    render->add_option("--state", opt.state, "comma separated swept vertex indices");

    CLI11_PARSE(app, argc, argv);

    Arrangement arr = Arrangement::from_json(slurp(opt.input));
    if (opt.scalar != "auto") {
        std::string mode = arr.quad_n == 0 ? "rational" : "quadratic:" + std::to_string(arr.quad_n);
        if (mode != opt.scalar) throw InputError("scalar mode mismatch: input is " + mode);
    }

    if (faces->parsed()) {
        emit(faces_report(arr), opt.out);
        return kExitOk;
    }
    if (lattice->parsed()) {
        emit(lattice_report(arr), opt.out);
        return kExitOk;
    }
    if (flag->parsed()) {
        Flag fl = load_or_build_flag(arr, opt);
        emit(flag_json_report(arr, fl, opt.seed), opt.out);
        return verify_flag(arr, fl.subspaces).pass ? kExitOk : kExitViolation;
    }
    if (sweep->parsed()) {
        Flag fl = load_or_build_flag(arr, opt);
        emit(sweep_report(fl, opt.seed), opt.out);
        return kExitOk;
    }
    if (polar->parsed()) {
        Flag fl = load_or_build_flag(arr, opt);
        Orderings ords = canonical_orderings(fl);
        emit(polar_report(fl, ords, opt.seed, opt.format), opt.out);
        return kExitOk;
    }
    if (morse->parsed()) {
        Flag fl = load_or_build_flag(arr, opt);
        Orderings ords = canonical_orderings(fl);
        bool pass = false;
        emit(morse_report(fl, ords, opt.seed, &pass), opt.out);
        return pass ? kExitOk : kExitViolation;
    }
    if (followup->parsed()) {
        bool result = false;
        if (arr.dim == 2 && opt.flag_file.empty()) {
            emit(followup_report(arr, nullptr, opt.seed, 4, &result), opt.out);
        } else {
            Flag fl = load_or_build_flag(arr, opt);
            emit(followup_report(arr, &fl, opt.seed, 4, &result), opt.out);
        }
        return kExitOk;
    }
    if (ss->parsed()) {
        bool pass = false;
        emit(supersolvable_report(arr, opt.seed, &pass), opt.out);
        return pass ? kExitOk : kExitViolation;
    }
    if (render->parsed()) {
        RenderOptions ro;
        if (!opt.flag_file.empty()) {
            ro.flag = Flag::subspaces_from_json(slurp(opt.flag_file), arr.quad_n);
        }
        if (!opt.state.empty()) {
            std::stringstream ss2(opt.state);
            std::string tok;
            while (std::getline(ss2, tok, ',')) ro.swept.push_back(std::stoi(tok));
        }
        emit(render_svg_2d(arr, ro), opt.out);
        return kExitOk;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LimitExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << std::endl;
        return kExitBudget;
    } catch (const FlagSearchExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << std::endl;
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitViolation;
    }
}
