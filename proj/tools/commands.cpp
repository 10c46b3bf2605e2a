#include "commands.hpp"

#include <iostream>
#include <memory>
#include <sstream>

#include "io.hpp"
#include "toric/basis.hpp"
#include "toric/hier.hpp"
#include "toric/ineq.hpp"
#include "toric/lift.hpp"
#include "toric/tfp.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace cli {

namespace {

struct Common {
    std::string out = "out";
    int threads = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads (0: available parallelism)");
}

Preorder weights_from(Run& run, const std::string& path, std::size_t dim) {
    if (path.empty()) return {};
    Matrix W = run.matrix(path);
    if (W.cols() != dim)
        throw parse_error(path + ": weights need " + std::to_string(dim) + " columns");
    return Preorder::from_integer(W.row_list());
}

GradedMatrix graded_from(Run& run, const std::string& matrix, const std::string& phi, const Matrix& A = Matrix()) {
    Matrix B = run.matrix(matrix);
    IndexMap m = run.index_map(phi);
    if (m.phi.size() != B.cols())
        throw parse_error(phi + ": " + std::to_string(m.phi.size()) + " entries for " + std::to_string(B.cols()) +
                          " columns");
    return GradedMatrix::make(B, m.phi, m.t, A);
}

std::string moves_of(const std::vector<Move>& ms, std::size_t n) { return moves_text(ms, n); }

void report(const std::string& what, std::size_t count) { std::cout << what << ": " << count << "\n"; }

/////////////////////////////////////////////////////////////////////////////

struct BasisOpts {
    Common c;
    std::string matrix, weights;
};

int run_basis(const BasisOpts& o, const std::string& kind) {
    Run run(kind, o.c.out);
    run.param("matrix", o.matrix);
    Matrix B = run.matrix(o.matrix);
    Lattice L = kernel_lattice(B);
    BasisResult r;
    if (kind == "markov") {
        r = markov_basis(L);
    } else if (kind == "graver") {
        r = graver_basis(L);
    } else {
        run.param("weights", o.weights);
        if (o.weights.empty()) throw parse_error("groebner needs --weights");
        r = groebner_basis(L, weights_from(run, o.weights, B.cols()));
    }
    run.output(kind + ".moves", moves_of(r.moves, B.cols()));
    report(kind + " moves", r.moves.size());
    run.finish(ok);
    return ok;
}

struct IneqOpts {
    Common c;
    std::string ineq, lattice, weights;
};

int run_ineq(const IneqOpts& o) {
    Run run("ineq-markov", o.c.out);
    run.param("ineq", o.ineq);
    run.param("lattice", o.lattice);
    run.param("weights", o.weights);
    Matrix D = run.matrix(o.ineq);
    Lattice L = Lattice::full(D.cols());
    if (!o.lattice.empty()) {
        Matrix Lm = run.matrix(o.lattice);
        if (Lm.cols() != D.cols()) throw parse_error(o.lattice + ": lattice basis rows must match D's columns");
        L = Lattice::from_generators(D.cols(), Lm.row_list());
    }
    auto sys = InequalitySystem::on_lattice(D, L);
    Preorder p = weights_from(run, o.weights, D.cols());
    auto M = p.trivial() ? inequality_markov_basis(sys) : inequality_groebner_basis(sys, p);
    run.output("ineq.moves", moves_of(M, D.cols()));
    report("inequality moves", M.size());
    run.finish(ok);
    return ok;
}

struct LiftOpts {
    Common c;
    std::string matrix, phi, facets, weights, tiebreak;
    int hole_bound = default_hole_bound;
    bool assume_normal = false;
};

ProjectedFiberDescription describe(Run& run, const GradedMatrix& g, const std::string& facets, int hole_bound,
                                   bool assume_normal) {
    if (facets.empty()) return pf_description(g, nullptr, hole_bound, assume_normal);
    Matrix F = run.matrix(facets);
    return pf_description(g, &F, hole_bound, assume_normal);
}

int run_lift(const LiftOpts& o) {
    Run run("lift", o.c.out);
    run.param("matrix", o.matrix);
    run.param("phi", o.phi);
    run.param("facets", o.facets);
    run.param("hole_bound", o.hole_bound);
    run.param("assume_normal", o.assume_normal);
    run.param("weights", o.weights);
    run.param("tiebreak", o.tiebreak);
    GradedMatrix g = graded_from(run, o.matrix, o.phi);
    auto desc = describe(run, g, o.facets, o.hole_bound, o.assume_normal);
    Preorder pim = weights_from(run, o.weights, g.t);
    Preorder tb = weights_from(run, o.tiebreak, g.n());
    auto r = lifted_groebner_basis(g, desc, pim, tb, thread_count(o.c.threads));
    std::vector<Move> lifts;
    for (auto& L : r.lifts) lifts.insert(lifts.end(), L.begin(), L.end());
    run.output("lifted.moves", moves_of(r.basis.moves, g.n()));
    run.output("kernel.moves", moves_of(r.kernel, g.n()));
    run.output("pf.moves", moves_of(r.pf_basis, g.t));
    run.output("lifts.moves", moves_of(lifts, g.n()));
    for (auto& c : r.caveats) run.note(c);
    report("lifted basis moves", r.basis.moves.size());
    run.finish(ok);
    return ok;
}

struct TfpOpts {
    Common c;
    std::vector<std::string> matrices, phis, facets;
    std::string base, weights;
    int hole_bound = default_hole_bound;
    bool assume_normal = false;
    std::size_t cap = default_glue_cap;
};

int run_tfp(const TfpOpts& o) {
    Run run("tfp", o.c.out);
    run.param("matrices", o.matrices);
    run.param("phis", o.phis);
    run.param("facets", o.facets);
    run.param("base", o.base);
    run.param("hole_bound", o.hole_bound);
    run.param("assume_normal", o.assume_normal);
    run.param("cap", o.cap);
    if (o.matrices.size() < 2 || o.matrices.size() != o.phis.size())
        throw parse_error("tfp needs at least two --matrix options, each with a --phi");
    if (!o.facets.empty() && o.facets.size() != o.matrices.size())
        throw parse_error("give --facets for every factor or for none");
    Matrix A = o.base.empty() ? Matrix() : run.matrix(o.base);
    std::vector<GradedMatrix> factors;
    for (std::size_t k = 0; k < o.matrices.size(); ++k) factors.push_back(graded_from(run, o.matrices[k], o.phis[k], A));

    if (factors.size() > 2) {
        auto it = iterated_tfp(factors);
        run.output("product.mat", matrix_text(it.graded.B));
        run.note("bases are computed for two factors only; the iterated product matrix was written");
        report("product columns", it.graded.n());
        run.finish(ok);
        return ok;
    }
    TfpInstance t = build_tfp(factors[0], factors[1]);
    run.output("product.mat", matrix_text(t.product));
    std::vector<ProjectedFiberDescription> d;
    for (std::size_t k = 0; k < 2; ++k)
        d.push_back(describe(run, factors[k], o.facets.empty() ? "" : o.facets[k], o.hole_bound, o.assume_normal));
    Preorder pim = weights_from(run, o.weights, t.t());
    auto r = tfp_pipeline(t, d[0], d[1], pim, {}, {}, thread_count(o.c.threads), o.cap);
    std::size_t n = t.product.cols();
    std::vector<Move> glued, ll, lr;
    for (std::size_t k = 0; k < r.pfi.size(); ++k) {
        glued.insert(glued.end(), r.glued[k].begin(), r.glued[k].end());
        ll.insert(ll.end(), r.lifts_left[k].begin(), r.lifts_left[k].end());
        lr.insert(lr.end(), r.lifts_right[k].begin(), r.lifts_right[k].end());
    }
    run.output("basis.moves", moves_of(r.basis.moves, n));
    run.output("codim0.moves", moves_of(r.codim_zero, n));
    run.output("pfi.moves", moves_of(r.pfi, t.t()));
    run.output("glues.moves", moves_of(glued, n));
    run.output("lifts_left.moves", moves_of(ll, factors[0].n()));
    run.output("lifts_right.moves", moves_of(lr, factors[1].n()));
    for (auto& c : r.caveats) run.note(c);
    report("product basis moves", r.basis.moves.size());
    run.finish(ok);
    return ok;
}

struct HierOpts {
    Common c;
    std::string complex, levels, action, v1, v2;
    int p = 2, q = 2, r = 2, hole_bound = 4, bound = 4;
};

std::string tableaux_text(const std::vector<Move>& ms, const HierModel& model) {
    std::string s;
    for (auto& m : ms) s += format_move(m, model) + "\n";
    return s;
}

int run_hier(const HierOpts& o) {
    Run run("hier", o.c.out);
    run.param("action", o.action);
    run.param("complex", o.complex);
    run.param("levels", o.levels);
    auto model = [&] {
        if (o.complex.empty() || o.levels.empty()) throw parse_error(o.action + " needs --complex and --levels");
        return HierModel::parse(o.complex, parse_int_list(o.levels));
    };
    if (o.action == "design") {
        auto m = model();
        Matrix B = design_matrix(m);
        run.output("design.mat", matrix_text(B));
        report("design matrix columns", B.cols());
    } else if (o.action == "split") {
        run.param("v1", o.v1);
        run.param("v2", o.v2);
        auto m = model();
        auto one_based = [](std::vector<int> v) {
            for (auto& x : v) --x;
            return v;
        };
        auto s = split(m, one_based(parse_int_list(o.v1)), one_based(parse_int_list(o.v2)));
        run.output("left.mat", matrix_text(s.left.B));
        run.output("left.phi", format_index_map({s.left.t, s.left.phi}));
        run.output("right.mat", matrix_text(s.right.B));
        run.output("right.phi", format_index_map({s.right.t, s.right.phi}));
        run.output("base.mat", matrix_text(s.A));
        run.note("left " + s.left_model.to_string() + ", right " + s.right_model.to_string() + ", base " +
                 s.base_model.to_string());
        report("grading classes", s.left.t);
    } else if (o.action == "graver-c3") {
        run.param("p", o.p);
        run.param("r", o.r);
        auto G = triangle_graver(o.p, o.r);
        HierModel tri({{0, 1}, {0, 2}, {1, 2}}, {o.p, 2, o.r});
        run.output("graver.moves", moves_of(G, tri.shape().size()));
        run.output("graver.txt", tableaux_text(G, tri));
        report("graver moves", G.size());
    } else if (o.action == "facets-c3") {
        run.param("p", o.p);
        run.param("r", o.r);
        auto F = c3_facets(o.p, o.r);
        run.output("inequalities.mat", matrix_text(F.rows));
        run.output("facets.mat", matrix_text(F.facets()));
        run.note(std::to_string(F.invalid) + " generated rows dropped as invalid, " + std::to_string(F.repeated) +
                 " as repeated");
        report("facets", F.facets().rows());
    } else if (o.action == "c4-basis") {
        run.param("p", o.p);
        run.param("q", o.q);
        auto r = c4_basis(o.p, o.q);
        auto m = c4_model(o.p, o.q);
        run.output("c4.moves", moves_of(r.moves, m.shape().size()));
        run.output("c4.txt", tableaux_text(r.moves, m));
        report("moves", r.moves.size());
    } else if (o.action == "k4e") {
        run.param("hole_bound", o.hole_bound);
        run.param("bound", o.bound);
        auto rep = k4e_workflow(o.hole_bound, o.bound);
        std::ostringstream s;
        s << "holes of " << rep.k4.to_string() << " up to degree " << rep.hole_bound << ": " << rep.holes.size() << "\n";
        for (auto& h : rep.holes) s << "  " << to_string(h) << "\n";
        s << "fiber of " << rep.c4_tilde.to_string() << " at 1:\n" << tableaux_text(rep.hole_fiber, rep.c4_tilde);
        s << "projected:\n";
        for (auto& u : rep.projected) s << "  " << to_string(u) << "\n";
        s << "PFI basis:\n";
        for (auto& u : rep.pfi) s << "  " << to_string(u) << "\n";
        s << "v fills 1 + first column: " << (rep.v_fills ? "yes" : "no") << "\n";
        s << "M1: " << rep.m1.size() << " moves, M: " << rep.m.size() << " moves, M Markov up to degree "
          << rep.oracle_bound << ": " << (rep.m_is_markov ? "yes" : "no") << "\n";
        s << "compatible projection M: " << rep.projection_m.message << "\n";
        s << "compatible projection M1: " << rep.projection_m1.message << "\n";
        run.output("k4e.txt", s.str());
        run.output("m.moves", moves_of(rep.m, rep.c4_tilde.shape().size()));
        run.output("m1.moves", moves_of(rep.m1, rep.c4_tilde.shape().size()));
        std::cout << s.str();
        int code = rep.m_is_markov && rep.projection_m.pass ? ok : verification_failed;
        run.finish(code);
        return code;
    } else {
        throw parse_error("unknown hier action " + o.action);
    }
    run.finish(ok);
    return ok;
}

struct VerifyOpts {
    Common c;
    std::string mode;
    std::vector<std::string> matrices, phis, moves;
    std::string weights, g, kernel, facets;
    int bound = default_bound;
};

int run_verify(const VerifyOpts& o) {
    Run run("verify", o.c.out);
    run.param("mode", o.mode);
    run.param("bound", o.bound);
    run.param("matrices", o.matrices);
    run.param("moves", o.moves);
    if (o.matrices.empty()) throw parse_error("verify needs --matrix");
    Matrix B = run.matrix(o.matrices[0]);
    auto moves_at = [&](std::size_t k) {
        if (k >= o.moves.size()) throw parse_error("verify --mode " + o.mode + " needs --moves");
        Matrix M = run.matrix(o.moves[k]);
        if (M.rows() && M.cols() != B.cols()) throw parse_error(o.moves[k] + ": moves have the wrong length");
        return M.row_list();
    };
    nlohmann::json v;
    bool pass = true;
    std::string message;
    if (o.mode == "markov" || o.mode == "groebner") {
        auto M = moves_at(0);
        Verdict r;
        if (o.mode == "markov") {
            r = markov_oracle(FiberFamily::matrix(B), M, o.bound, thread_count(o.c.threads));
        } else {
            run.param("weights", o.weights);
            r = groebner_oracle(FiberFamily::matrix(B), M, weights_from(run, o.weights, B.cols()), o.bound,
                                thread_count(o.c.threads));
        }
        pass = r.pass;
        message = r.message;
        v["fibers_checked"] = r.fibers_checked;
        if (!r.pass) v["witness"] = r.witness;
    } else if (o.mode == "graver") {
        auto r = graver_oracle(kernel_lattice(B), moves_at(0), o.bound);
        pass = r.pass;
        message = r.message;
    } else if (o.mode == "lift") {
        run.param("g", o.g);
        run.param("kernel", o.kernel);
        if (o.phis.empty() || o.g.empty()) throw parse_error("lift mode needs --phi and --g");
        IndexMap m = run.index_map(o.phis[0]);
        Matrix gm = run.matrix(o.g);
        if (gm.rows() != 1 || gm.cols() != m.t) throw parse_error(o.g + ": expected one row with t entries");
        std::vector<Move> K;
        if (!o.kernel.empty()) K = run.matrix(o.kernel).row_list();
        auto r = lift_oracle(moves_at(0), gm.row(0), B, m.phi, m.t, K, weights_from(run, o.weights, B.cols()),
                             o.bound);
        pass = r.pass;
        message = r.message;
        v["fibers_checked"] = r.fibers_checked;
    } else if (o.mode == "holes") {
        run.param("facets", o.facets);
        std::vector<Move> H;
        if (o.facets.empty()) {
            H = holes(B, o.bound);
        } else {
            Matrix F = run.matrix(o.facets);
            H = holes(B, o.bound, &F);
        }
        run.output("holes.mat", moves_of(H, B.rows()));
        pass = H.empty();
        message = std::to_string(H.size()) + " holes up to degree " + std::to_string(o.bound);
    } else if (o.mode == "cpp") {
        run.param("phis", o.phis);
        if (o.phis.empty()) throw parse_error("cpp mode needs --phi");
        auto M1 = moves_at(0);
        GradedMatrix g1 = graded_from(run, o.matrices[0], o.phis[0]);
        GradedMatrix g2 = g1;
        auto M2 = M1;
        if (o.matrices.size() > 1) {
            if (o.phis.size() < 2 || o.moves.size() < 2)
                throw parse_error("a second --matrix needs its own --phi and --moves");
            g2 = graded_from(run, o.matrices[1], o.phis[1]);
            M2 = run.matrix(o.moves[1]).row_list();
        }
        auto r = check_compatible_projection(M1, M2, build_tfp(g1, g2), o.bound);
        pass = r.pass;
        message = r.message;
        v["pairs_checked"] = r.pairs_checked;
    } else {
        throw parse_error("unknown verify mode " + o.mode);
    }
    v["pass"] = pass;
    v["message"] = message;
    run.output("verdict.json", v.dump(2) + "\n");
    std::cout << (pass ? "PASS" : "FAIL") << ": " << message << "\n";
    int code = pass ? ok : verification_failed;
    run.finish(code);
    return code;
}

struct DegreeOpts {
    Common c;
    std::vector<std::string> matrices, phis, facets;
    std::string pfi;
    int hole_bound = default_hole_bound;
    bool assume_normal = false;
};

int run_degree(const DegreeOpts& o) {
    Run run("degree-bound", o.c.out);
    run.param("matrices", o.matrices);
    run.param("phis", o.phis);
    run.param("pfi", o.pfi);
    if (o.matrices.empty() || o.matrices.size() != o.phis.size())
        throw parse_error("degree-bound needs --matrix and --phi for each factor");
    if (!o.facets.empty() && o.facets.size() != o.matrices.size())
        throw parse_error("give --facets for every factor or for none");
    std::vector<GradedMatrix> factors;
    for (std::size_t k = 0; k < o.matrices.size(); ++k) factors.push_back(graded_from(run, o.matrices[k], o.phis[k]));
    std::vector<Move> G;
    if (!o.pfi.empty()) {
        G = run.matrix(o.pfi).row_list();
    } else {
        // one inequality system for all intersections of projected fibers
        Lattice L;
        Matrix D;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            auto d = describe(run, factors[k], o.facets.empty() ? "" : o.facets[k], o.hole_bound, o.assume_normal);
            L = k ? intersect(L, d.L) : d.L;
            D = k ? D.vstack(d.D2) : d.D2;
            for (auto& c : d.caveats) run.note(c);
        }
        G = pfi_groebner_basis({L, D});
    }
    std::vector<std::string> notes;
    Int bound = iterated_degree_bound(factors, G, &notes);
    for (auto& n : notes) run.note(n);
    run.output("pfi.moves", moves_of(G, factors[0].t));
    run.output("degree_bound.txt", std::to_string(bound) + "\n");
    std::cout << "Markov degree bound: " << bound << "\n";
    run.finish(ok);
    return ok;
}

} // namespace

void register_commands(CLI::App& app, std::function<int()>& action) {
    app.require_subcommand(1);

    for (std::string kind : {"markov", "groebner", "graver"}) {
        auto o = std::make_shared<BasisOpts>();
        auto* sub = app.add_subcommand(kind, kind == "markov"   ? "Minimal Markov basis of ker B"
                                             : kind == "graver" ? "Graver basis of ker B"
                                                                : "Groebner basis of ker B for a weight cascade");
        add_common(sub, o->c);
        sub->add_option("--matrix", o->matrix, "Matrix file")->required();
        if (kind == "groebner") sub->add_option("--weights", o->weights, "Weight rows, most significant first");
        sub->callback([o, kind, &action] { action = [o, kind] { return run_basis(*o, kind); }; });
    }
    {
        auto o = std::make_shared<IneqOpts>();
        auto* sub = app.add_subcommand("ineq-markov", "Inequality Markov or Groebner basis of {u in L : D u >= c}");
        add_common(sub, o->c);
        sub->add_option("--ineq", o->ineq, "Inequality matrix D")->required();
        sub->add_option("--lattice", o->lattice, "Lattice generators as rows (default Z^n)");
        sub->add_option("--weights", o->weights, "Weight rows for a Groebner basis");
        sub->callback([o, &action] { action = [o] { return run_ineq(*o); }; });
    }
    {
        auto o = std::make_shared<LiftOpts>();
        auto* sub = app.add_subcommand("lift", "Lifted Groebner basis of ker B along an index map");
        add_common(sub, o->c);
        sub->add_option("--matrix", o->matrix, "Matrix file")->required();
        sub->add_option("--phi", o->phi, "Index map file")->required();
        sub->add_option("--facets", o->facets, "Facet rows of the cone over B^phi");
        sub->add_option("--hole-bound", o->hole_bound, "Degree bound for the hole scan")->capture_default_str();
        sub->add_flag("--assume-normal", o->assume_normal, "Skip the hole scan");
        sub->add_option("--weights", o->weights, "Weight rows on Z^t");
        sub->add_option("--tiebreak", o->tiebreak, "Weight rows on Z^n");
        sub->callback([o, &action] { action = [o] { return run_lift(*o); }; });
    }
    {
        auto o = std::make_shared<TfpOpts>();
        auto* sub = app.add_subcommand("tfp", "Toric fiber product and its Markov basis");
        add_common(sub, o->c);
        sub->add_option("--matrix", o->matrices, "Factor matrix (repeat per factor)")->required();
        sub->add_option("--phi", o->phis, "Factor index map (repeat per factor)")->required();
        sub->add_option("--facets", o->facets, "Facet rows per factor");
        sub->add_option("--base", o->base, "Base matrix A");
        sub->add_option("--weights", o->weights, "Weight rows on Z^t");
        sub->add_option("--hole-bound", o->hole_bound, "Degree bound for the hole scan")->capture_default_str();
        sub->add_flag("--assume-normal", o->assume_normal, "Skip the hole scan");
        sub->add_option("--cap", o->cap, "Glue candidate cap")->capture_default_str();
        sub->callback([o, &action] { action = [o] { return run_tfp(*o); }; });
    }
    {
        auto o = std::make_shared<HierOpts>();
        auto* sub = app.add_subcommand("hier", "Hierarchical models");
        add_common(sub, o->c);
        sub->add_option("--action", o->action, "design|split|graver-c3|facets-c3|c4-basis|k4e")
            ->required()
            ->check(CLI::IsMember({"design", "split", "graver-c3", "facets-c3", "c4-basis", "k4e"}));
        sub->add_option("--complex", o->complex, "Facets, e.g. [12][13][23]");
        sub->add_option("--levels", o->levels, "Comma separated level counts");
        sub->add_option("--v1", o->v1, "First part of a split (one-based, comma separated)");
        sub->add_option("--v2", o->v2, "Second part of a split");
        sub->add_option("--p", o->p, "Levels of the first vertex")->capture_default_str();
        sub->add_option("--q", o->q, "Levels of the last vertex (c4-basis)")->capture_default_str();
        sub->add_option("--r", o->r, "Levels of the third vertex (triangle)")->capture_default_str();
        sub->add_option("--hole-bound", o->hole_bound, "k4e hole scan degree")->capture_default_str();
        sub->add_option("--bound", o->bound, "k4e oracle degree")->capture_default_str();
        sub->callback([o, &action] { action = [o] { return run_hier(*o); }; });
    }
    {
        auto o = std::make_shared<VerifyOpts>();
        auto* sub = app.add_subcommand("verify", "Bounded oracles");
        add_common(sub, o->c);
        sub->add_option("--mode", o->mode, "markov|groebner|lift|graver|holes|cpp")
            ->required()
            ->check(CLI::IsMember({"markov", "groebner", "lift", "graver", "holes", "cpp"}));
        sub->add_option("--matrix", o->matrices, "Matrix file (cpp: one or two)")->required();
        sub->add_option("--phi", o->phis, "Index map file (lift, cpp)");
        sub->add_option("--moves", o->moves, "Moves file (cpp: one per matrix)");
        sub->add_option("--weights", o->weights, "Weight rows (groebner, lift)");
        sub->add_option("--g", o->g, "The move on Z^t to lift (one row)");
        sub->add_option("--kernel", o->kernel, "Kernel moves for the lift walk");
        sub->add_option("--facets", o->facets, "Facet rows (holes)");
        sub->add_option("--bound", o->bound, "Degree or norm bound")->capture_default_str();
        sub->callback([o, &action] { action = [o] { return run_verify(*o); }; });
    }
    {
        auto o = std::make_shared<DegreeOpts>();
        auto* sub = app.add_subcommand("degree-bound", "Markov degree bound for iterated fiber products");
        add_common(sub, o->c);
        sub->add_option("--matrix", o->matrices, "Factor matrix (repeat per factor)")->required();
        sub->add_option("--phi", o->phis, "Factor index map (repeat per factor)")->required();
        sub->add_option("--facets", o->facets, "Facet rows per factor");
        sub->add_option("--pfi", o->pfi, "PFI basis rows (computed when absent)");
        sub->add_option("--hole-bound", o->hole_bound, "Degree bound for the hole scan")->capture_default_str();
        sub->add_flag("--assume-normal", o->assume_normal, "Skip the hole scan");
        sub->callback([o, &action] { action = [o] { return run_degree(*o); }; });
    }
}

} // namespace cli
