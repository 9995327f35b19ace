// convexsg: construct polyhedra from set files, run the semigroup
// operations, the cancellation checks, the quotient-space commands, the
// axiom harness, the property suites and the counterexample lab.
//
// Exit codes: 0 success, 1 failed verification (a would-be counterexample,
// an axiom failure, an unverified lab fact), 2 input error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "convexsg/suites.hpp"

using namespace convexsg;

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    std::string out_path;
    std::uint64_t seed = 20240917ull;
    std::string tol_text = "1/1024";
    Clock::time_point start = Clock::now();

    std::vector<std::string> command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    Json verdicts = Json::object();
    int exit_code = 0;

    Rational tol() const {
        auto r = Rational::parse(tol_text);
        if (!r || r->sign() <= 0 || !r->is_dyadic())
            throw InputError("--tol must be a positive dyadic rational");
        return *r;
    }

    Polyhedron load(const std::string& path) {
        inputs[path] = fnv1a_hex(read_file(path));
        return load_polyhedron(path);
    }

    void emit() {
        Json rep;
        rep["command"] = command;
        rep["inputs"] = inputs;
        rep["outputs"] = outputs;
        rep["verdicts"] = verdicts;
        rep["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        std::string text = rep.dump(2);
        std::cout << text << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw InputError("cannot write report to " + out_path);
            f << text << "\n";
        }
    }
};

void check_same_dim(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) throw InputError("input sets have different dimensions");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral semigroup calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    Ctx ctx;
    for (int i = 0; i < argc; ++i) ctx.command.push_back(argv[i]);
    app.add_option("--out", ctx.out_path, "also write the run report to this file");
    app.add_option("--seed", ctx.seed, "seed for randomized property commands");
    app.add_option("--tol", ctx.tol_text, "convergence tolerance (dyadic rational)");

    std::string file_a, file_b, file_c, cone_file, direction, point, mode = "robinson";
    std::string experiment, instance_name, candidate_file, lambda_text;
    std::vector<std::string> seq_files;
    int lab_n = 2;
    int cases = 25;

    auto* sum = app.add_subcommand("sum", "Minkowski sum of two sets");
    sum->add_option("A", file_a)->required();
    sum->add_option("B", file_b)->required();

    auto* erode_cmd = app.add_subcommand("erode", "Minkowski difference A - B");
    erode_cmd->add_option("A", file_a)->required();
    erode_cmd->add_option("B", file_b)->required();

    auto* recc_cmd = app.add_subcommand("recc", "recession cone");
    recc_cmd->add_option("A", file_a)->required();

    auto* support_cmd = app.add_subcommand("support", "support function value");
    support_cmd->add_option("A", file_a)->required();
    support_cmd->add_option("--direction", direction, "comma-separated rationals")->required();

    auto* contains_cmd = app.add_subcommand("contains", "point membership");
    contains_cmd->add_option("A", file_a)->required();
    contains_cmd->add_option("--point", point, "comma-separated rationals")->required();

    auto* subset_cmd = app.add_subcommand("subset", "set inclusion A in B");
    subset_cmd->add_option("A", file_a)->required();
    subset_cmd->add_option("B", file_b)->required();

    auto* gap_cmd = app.add_subcommand("gap", "bounded Hausdorff-like gap");
    gap_cmd->add_option("A", file_a)->required();
    gap_cmd->add_option("B", file_b)->required();

    auto* cancel_cmd = app.add_subcommand("cancel", "order cancellation check");
    cancel_cmd->add_option("A", file_a)->required();
    cancel_cmd->add_option("B", file_b)->required();
    cancel_cmd->add_option("C", file_c)->required();
    cancel_cmd->add_option("--mode", mode)->check(CLI::IsMember({"robinson", "cv"}));
    cancel_cmd->add_option("--cone", cone_file, "cone file (required in cv mode)");

    auto* mrh_cmd = app.add_subcommand("mrh", "quotient space operations");
    mrh_cmd->require_subcommand(1);
    auto* mrh_add_cmd = mrh_cmd->add_subcommand("add", "[A,B] + [C,D]");
    auto* mrh_scale_cmd = mrh_cmd->add_subcommand("scale", "lambda * [A,B]");
    auto* mrh_eq_cmd = mrh_cmd->add_subcommand("eq", "class equality");
    auto* mrh_embed_cmd = mrh_cmd->add_subcommand("embed", "j(A) = [A,V]");
    auto* mrh_limit_cmd = mrh_cmd->add_subcommand("limit", "gap-based convergence check");
    std::string pa, na, pb, nb;
    for (auto* c : {mrh_add_cmd, mrh_eq_cmd}) {
        c->add_option("POS_A", pa)->required();
        c->add_option("NEG_A", na)->required();
        c->add_option("POS_B", pb)->required();
        c->add_option("NEG_B", nb)->required();
        c->add_option("--cone", cone_file)->required();
    }
    mrh_scale_cmd->add_option("LAMBDA", lambda_text)->required();
    mrh_scale_cmd->add_option("POS", pa)->required();
    mrh_scale_cmd->add_option("NEG", na)->required();
    mrh_scale_cmd->add_option("--cone", cone_file)->required();
    mrh_embed_cmd->add_option("A", file_a)->required();
    mrh_embed_cmd->add_option("--cone", cone_file)->required();
    mrh_limit_cmd->add_option("SEQUENCE", seq_files, "set files, in order")->required();
    mrh_limit_cmd->add_option("--candidate", candidate_file)->required();

    auto* lab_cmd = app.add_subcommand("lab", "counterexample truncations");
    lab_cmd->add_option("experiment", experiment)
        ->required()
        ->check(CLI::IsMember({"halfline", "nonclosed", "cubes"}));
    lab_cmd->add_option("--N", lab_n, "truncation index")->required();

    auto* axioms_cmd = app.add_subcommand("axioms", "run the S1-S11 harness");
    axioms_cmd->add_option("instance", instance_name)
        ->required()
        ->check(CLI::IsMember({"dyadic", "finite-subsets", "polyhedra"}));
    axioms_cmd->add_option("--cone", cone_file, "cone file (required for polyhedra)");

    auto* props_cmd = app.add_subcommand("props", "randomized property suites");
    props_cmd->add_option("--cases", cases, "cases per suite");

    try {
        app.parse(argc, argv);

        if (*sum) {
            Polyhedron a = ctx.load(file_a), b = ctx.load(file_b);
            check_same_dim(a, b);
            ctx.outputs["result"] = poly_to_json(minkowski_sum(a, b));
        } else if (*erode_cmd) {
            Polyhedron a = ctx.load(file_a), b = ctx.load(file_b);
            check_same_dim(a, b);
            auto e = erode(a, b);
            ctx.outputs["result"] = e ? poly_to_json(*e) : Json("EMPTY");
        } else if (*recc_cmd) {
            ctx.outputs["result"] = poly_to_json(recession_cone(ctx.load(file_a)));
        } else if (*support_cmd) {
            Polyhedron a = ctx.load(file_a);
            auto s = support_function(a, parse_rational_csv(direction, a.dim()));
            ctx.outputs["result"] = s ? Json(s->str()) : Json("inf");
        } else if (*contains_cmd) {
            Polyhedron a = ctx.load(file_a);
            ctx.verdicts["contains"] = contains_point(a, parse_rational_csv(point, a.dim()));
        } else if (*subset_cmd) {
            Polyhedron a = ctx.load(file_a), b = ctx.load(file_b);
            check_same_dim(a, b);
            ctx.verdicts["subset"] = subset(a, b);
        } else if (*gap_cmd) {
            Polyhedron a = ctx.load(file_a), b = ctx.load(file_b);
            check_same_dim(a, b);
            ctx.outputs["result"] = gap_to_json(hausdorff_gap(a, b));
        } else if (*cancel_cmd) {
            Polyhedron a = ctx.load(file_a), b = ctx.load(file_b), c = ctx.load(file_c);
            check_same_dim(a, b);
            check_same_dim(a, c);
            if (mode == "robinson") {
                CancelReport rep = order_cancel(a, b, c);
                ctx.verdicts["premise"] = rep.premise;
                ctx.verdicts["conclusion"] = rep.conclusion;
                ctx.verdicts["recc_b_in_recc_c"] = rep.recc_b_in_recc_c;
                ctx.verdicts["recc_c_pointed"] = rep.recc_c_pointed;
                if (rep.premise && rep.hypotheses() && !rep.conclusion) ctx.exit_code = 1;
            } else {
                if (cone_file.empty()) throw InputError("cv mode requires --cone");
                Polyhedron v = ctx.load(cone_file);
                CvCancelReport rep = cancel_in_CV(a, b, c, v);
                ctx.verdicts["premise"] = rep.premise;
                ctx.verdicts["conclusion"] = rep.conclusion;
                ctx.outputs["b_limit_evidence"] = powers_report_to_json(rep.b_limit_evidence);
                if (rep.premise && !rep.conclusion) ctx.exit_code = 1;
            }
        } else if (*mrh_cmd) {
            if (*mrh_limit_cmd) {
                std::vector<Polyhedron> seq;
                for (const std::string& f : seq_files) seq.push_back(ctx.load(f));
                Polyhedron cand = ctx.load(candidate_file);
                ctx.verdicts["converges"] = limit_check(seq, cand, ctx.tol());
            } else if (*mrh_embed_cmd) {
                Polyhedron v = ctx.load(cone_file);
                MrhClass x = embed_j(ctx.load(file_a), v);
                ctx.outputs["result"] = mrh_class_to_json(x);
            } else if (*mrh_scale_cmd) {
                auto lambda = Rational::parse(lambda_text);
                if (!lambda) throw InputError("cannot parse scale factor " + lambda_text);
                Polyhedron v = ctx.load(cone_file);
                MrhClass x = mrh_make(ctx.load(pa), ctx.load(na), v);
                ctx.outputs["result"] = mrh_class_to_json(mrh_scale(*lambda, x));
            } else {
                Polyhedron v = ctx.load(cone_file);
                MrhClass x = mrh_make(ctx.load(pa), ctx.load(na), v);
                MrhClass y = mrh_make(ctx.load(pb), ctx.load(nb), v);
                if (*mrh_add_cmd) {
                    ctx.outputs["result"] = mrh_class_to_json(mrh_add(x, y));
                } else {
                    ctx.verdicts["equivalent"] = mrh_equivalent(x, y);
                }
            }
        } else if (*lab_cmd) {
            TruncationReport rep;
            if (experiment == "halfline") {
                rep = verify_halfline_emergence(lab_n);
            } else if (experiment == "nonclosed") {
                rep = verify_nonclosedness_trend({lab_n});
            } else {
                rep = verify_growing_cubes(lab_n);
            }
            ctx.outputs["report"] = truncation_report_to_json(rep);
            ctx.verdicts["all_verified"] = rep.all_verified();
            if (!rep.all_verified()) ctx.exit_code = 1;
        } else if (*axioms_cmd) {
            AxiomReport rep;
            if (instance_name == "dyadic") {
                rep = check_axioms(DyadicInstance(ctx.tol()), dyadic_bank());
            } else if (instance_name == "finite-subsets") {
                rep = check_axioms(FiniteSubsetInstance(), finite_subset_bank());
            } else {
                if (cone_file.empty()) throw InputError("polyhedra instance requires --cone");
                PolyhedralConeInstance inst(ctx.load(cone_file), ctx.tol());
                rep = check_axioms(inst, polyhedral_bank(inst));
            }
            ctx.outputs["report"] = axiom_report_to_json(rep);
            ctx.verdicts["all_passed"] = rep.all_passed();
            if (!rep.all_passed()) ctx.exit_code = 1;
        } else if (*props_cmd) {
            ctx.outputs["report"] = property_suite_report(ctx.seed, cases);
        }

        ctx.emit();
        return ctx.exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
