// ek: compile weighted tournaments into exact 2-d Euclidean preference
// embeddings (l1 / l2 / linf), derive profiles, solve Kemeny and Slater
// ranking exactly, and run the feedback-arc-set <-> Kemeny pipeline.

#include "ek/construct.hpp"
#include "ek/core.hpp"
#include "ek/errors.hpp"
#include "ek/gen.hpp"
#include "ek/geometry.hpp"
#include "ek/io.hpp"
#include "ek/pipeline.hpp"
#include "ek/solve.hpp"
#include "ek/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitTie = 4;
constexpr int kExitCapacity = 5;
constexpr int kExitMismatch = 6;

ek::Norm parse_norm(const std::string& s) {
    if (s == "l1") return ek::Norm::L1;
    if (s == "l2") return ek::Norm::L2;
    if (s == "linf") return ek::Norm::Linf;
    throw ek::InputError("unknown norm '" + s + "' (expected l1, l2 or linf)");
}

int max_coordinate_bits(const ek::EmbeddingFile& file) {
    int bits = 0;
    if (const auto* planar = std::get_if<ek::PlanarEmbedding>(&file.embedding)) {
        for (const auto& c : planar->candidates) {
            bits = std::max(bits, ek::coordinate_bit_length(c.pos.x));
            bits = std::max(bits, ek::coordinate_bit_length(c.pos.y));
        }
        for (const auto& v : planar->voters) {
            bits = std::max(bits, ek::coordinate_bit_length(v.pos.x));
            bits = std::max(bits, ek::coordinate_bit_length(v.pos.y));
        }
    } else {
        const auto& circ = std::get<ek::CircularEmbedding>(file.embedding);
        for (const auto& c : circ.candidates) bits = std::max(bits, ek::coordinate_bit_length(c.angle));
        for (const auto& v : circ.voters) bits = std::max(bits, ek::coordinate_bit_length(v.angle));
    }
    return bits;
}

long long embedding_voters(const ek::EmbeddingFile& file) {
    long long v = 0;
    if (const auto* planar = std::get_if<ek::PlanarEmbedding>(&file.embedding)) {
        for (const auto& voter : planar->voters) v += voter.multiplicity;
    } else {
        for (const auto& voter : std::get<ek::CircularEmbedding>(file.embedding).voters)
            v += voter.multiplicity;
    }
    return v;
}

int cmd_construct(const std::string& norm_name, const std::string& in, const std::string& out) {
    const ek::Norm norm = parse_norm(norm_name);
    const ek::WeightedTournament t = ek::parse_tournament(ek::read_text_file(in));
    ek::EmbeddingFile file;
    if (norm == ek::Norm::L2) {
        file.embedding = ek::construct_l2(t);
    } else {
        if (ek::check_parity(t) != ek::Parity::AllEven)
            throw ek::ParityError("square constructions need all-even weights, got " +
                                  ek::to_string(ek::check_parity(t)));
        const auto b = ek::check_bipartite(t);
        if (!b) throw ek::BipartitionError("tournament is not bipartite");
        file.embedding = norm == ek::Norm::L1 ? ek::construct_l1(t, *b) : ek::construct_linf(t, *b);
    }
    ek::write_text_file(out, ek::serialize_embedding(file));
    std::cout << "voters: " << embedding_voters(file) << "\n";
    std::cout << "max coordinate bit-length: " << max_coordinate_bits(file) << "\n";
    return kExitOk;
}

int cmd_derive(const std::string& in, const std::string& out) {
    const ek::EmbeddingFile file = ek::parse_embedding(ek::read_text_file(in));
    const ek::Profile p = std::visit([](const auto& e) { return ek::derive_profile(e); },
                                     file.embedding);
    ek::write_text_file(out, ek::serialize_profile(p));
    std::cout << "voters: " << p.total_voters() << "\n";
    return kExitOk;
}

void print_result(const ek::KemenyResult& r) {
    std::cout << "ranking:";
    for (std::size_t i = 0; i < r.optimal.order.size(); ++i)
        std::cout << (i == 0 ? " " : " > ") << r.optimal.order[i];
    std::cout << "\ncost: " << r.cost << "\n";
    if (r.optima_count) std::cout << "optima: " << *r.optima_count << "\n";
}

int cmd_kemeny(const std::string& in, bool brute_force) {
    const ek::Profile p = ek::parse_profile(ek::read_text_file(in));
    print_result(brute_force ? ek::kemeny_brute_force(p) : ek::kemeny_dp(p));
    return kExitOk;
}

int cmd_slater(const std::string& in) {
    const ek::WeightedTournament t = ek::parse_tournament(ek::read_text_file(in));
    print_result(ek::slater_ranking(t));
    return kExitOk;
}

int cmd_verify(const std::string& norm_name, const std::string& in) {
    const ek::Norm norm = parse_norm(norm_name);
    const ek::WeightedTournament t = ek::parse_tournament(ek::read_text_file(in));
    const ek::InducibilityReport rep = ek::verify_inducibility(t, norm);
    std::cout << (rep.ok ? "PASS" : "FAIL") << ": " << rep.diagnostics << "\n";
    if (rep.ok) std::cout << "profile voters: " << rep.total_voters << "\n";
    return rep.ok ? kExitOk : kExitMismatch;
}

int cmd_pipeline(const std::string& norm_name, const std::string& in) {
    const ek::Norm norm = parse_norm(norm_name);
    const ek::FasInstance f = ek::parse_fas(ek::read_text_file(in));
    const ek::PipelineReport rep = ek::run_pipeline(f, norm);
    std::cout << rep.to_text();
    std::cout << (rep.oracle_agrees() ? "PASS" : "FAIL") << "\n";
    return rep.oracle_agrees() ? kExitOk : kExitMismatch;
}

int cmd_plot(const std::string& in, const std::string& out, bool labels) {
    const ek::EmbeddingFile file = ek::parse_embedding(ek::read_text_file(in));
    ek::PlotOptions opts;
    opts.labels = labels;
    ek::write_text_file(out, ek::render_svg(file, opts));
    return kExitOk;
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("EK_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ek::InputError(std::string("EK_SEED must be an unsigned integer, got '") + s + "'");
        }
    }
    return 1;
}

int cmd_gen(const std::string& kind, int n, int max_weight, int voters, int max_arcs,
            const std::string& out) {
    std::mt19937_64 rng(seed_from_env());
    std::string payload;
    if (kind == "even-bipartite") {
        payload = ek::serialize_tournament(ek::random_even_bipartite_tournament(n, max_weight, rng));
    } else if (kind == "even") {
        payload = ek::serialize_tournament(
            ek::random_parity_tournament(n, ek::Parity::AllEven, max_weight, rng));
    } else if (kind == "odd") {
        payload = ek::serialize_tournament(
            ek::random_parity_tournament(n, ek::Parity::AllOdd, max_weight, rng));
    } else if (kind == "fas") {
        payload = ek::serialize_fas(ek::random_bipartite_digraph(n, max_arcs, rng));
    } else if (kind == "profile") {
        payload = ek::serialize_profile(ek::random_profile(n, voters, rng));
    } else {
        throw ek::InputError("unknown kind '" + kind +
                             "' (expected even-bipartite, even, odd, fas or profile)");
    }
    ek::write_text_file(out, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euclidean preference embeddings and Kemeny/Slater solving"};
    app.require_subcommand(1);

    std::string norm = "l2", in, out = "out", kind = "even-bipartite";
    bool brute_force = false, labels = false;
    int n = 4, max_weight = 10, voters = 5, max_arcs = 8;

    auto* construct = app.add_subcommand("construct", "compile a tournament into an embedding");
    construct->add_option("--norm", norm, "l1, l2 or linf")->required();
    construct->add_option("--in", in, "tournament file")->required();
    construct->add_option("--out", out, "embedding file to write")->required();

    auto* derive = app.add_subcommand("derive", "derive the preference profile of an embedding");
    derive->add_option("--in", in, "embedding file")->required();
    derive->add_option("--out", out, "profile file to write")->required();

    auto* kemeny = app.add_subcommand("kemeny", "exact Kemeny consensus of a profile");
    kemeny->add_option("--in", in, "profile file")->required();
    kemeny->add_flag("--brute-force", brute_force, "enumerate all rankings (also counts optima)");

    auto* slater = app.add_subcommand("slater", "exact Slater ranking of a tournament");
    slater->add_option("--in", in, "tournament file")->required();

    auto* verify = app.add_subcommand("verify", "construct, derive and check the round trip");
    verify->add_option("--norm", norm, "l1, l2 or linf")->required();
    verify->add_option("--in", in, "tournament file")->required();

    auto* pipeline = app.add_subcommand("pipeline", "FAS -> tournament -> embedding -> Kemeny");
    pipeline->add_option("--norm", norm, "l1, l2 or linf")->required();
    pipeline->add_option("--in", in, "FAS digraph file")->required();

    auto* plot = app.add_subcommand("plot", "render an embedding as SVG");
    plot->add_option("--in", in, "embedding file")->required();
    plot->add_option("--out", out, "SVG file to write")->required();
    plot->add_flag("--labels", labels, "label voter dots");

    auto* gen = app.add_subcommand("gen", "generate random test instances (seed: EK_SEED)");
    gen->add_option("--kind", kind, "even-bipartite, even, odd, fas or profile");
    gen->add_option("--n", n, "node/candidate count");
    gen->add_option("--max-weight", max_weight, "maximum tournament weight");
    gen->add_option("--voters", voters, "voter count (profile kind)");
    gen->add_option("--max-arcs", max_arcs, "arc cap (fas kind)");
    gen->add_option("--out", out, "file to write")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(norm, in, out);
        if (derive->parsed()) return cmd_derive(in, out);
        if (kemeny->parsed()) return cmd_kemeny(in, brute_force);
        if (slater->parsed()) return cmd_slater(in);
        if (verify->parsed()) return cmd_verify(norm, in);
        if (pipeline->parsed()) return cmd_pipeline(norm, in);
        if (plot->parsed()) return cmd_plot(in, out, labels);
        if (gen->parsed()) return cmd_gen(kind, n, max_weight, voters, max_arcs, out);
    } catch (const ek::ParityError& ex) {
        std::cerr << "error (parity): " << ex.what() << "\n";
        return kExitAdmissibility;
    } catch (const ek::BipartitionError& ex) {
        std::cerr << "error (bipartition): " << ex.what() << "\n";
        return kExitAdmissibility;
    } catch (const ek::TieError& ex) {
        std::cerr << "error (tie): " << ex.what() << "\n";
        return kExitTie;
    } catch (const ek::CapacityError& ex) {
        std::cerr << "error (capacity): " << ex.what() << "\n";
        return kExitCapacity;
    } catch (const ek::InputError& ex) {
        std::cerr << "error (input): " << ex.what() << "\n";
        return kExitParse;
    } catch (const ek::EmptyProfileError& ex) {
        std::cerr << "error (input): " << ex.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
