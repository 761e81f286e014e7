#include <doctest.h>

#include "mvis/bench.hpp"

using namespace mvis;

namespace {

Instance make_instance(const std::string& id, GraphClassSpec spec, Category cat, std::uint64_t seed = 0) {
    Graph g = generate(spec, seed);
    KnownMu known = known_mu(spec, g);
    return Instance{id, spec, std::move(g), known, cat, seed};
}

RunRecord record(const std::string& cls, Algo algo, std::optional<double> ratio, std::optional<double> elapsed,
                 Category cat = Category::N10) {
    RunRecord r;
    r.graph_id = cls + "-x";
    r.graph_class = cls;
    r.category = cat;
    r.algo = algo;
    r.ratio = ratio;
    r.elapsed_seconds = elapsed;
    return r;
}

} // namespace

TEST_CASE("algo names round-trip") {
    for (Algo a : {Algo::Random, Algo::Hyper, Algo::Genetic, Algo::Exact}) CHECK(parse_algo(to_string(a)) == a);
    CHECK(parse_algo_list("random,genetic") == std::vector<Algo>{Algo::Random, Algo::Genetic});
    CHECK_THROWS_AS(parse_algo("annealing"), std::invalid_argument);
}

TEST_CASE("complete graph matrix gives ratio one everywhere") {
    std::vector<Instance> suite{make_instance("k10", gclass::Complete{10}, Category::N10)};
    AlgoSelection sel;
    RunOptions opts;
    opts.timing = false;
    auto records = run_matrix(suite, sel, 3, 7, opts);
    REQUIRE(records.size() == 9);
    for (const auto& r : records) {
        CHECK(r.set_size == std::optional<std::size_t>(10));
        CHECK(r.feasible);
        REQUIRE(r.ratio.has_value());
        CHECK(*r.ratio == 1.0);
        CHECK_FALSE(r.elapsed_seconds.has_value());
        CHECK(r.delta_lb == 9);
        CHECK(r.n == 10);
        CHECK(r.m == 45);
    }
    // Sorted by (graph_id, algo name, rep): genetic < hyper < random.
    CHECK(records[0].algo == Algo::Genetic);
    CHECK(records[3].algo == Algo::Hyper);
    CHECK(records[6].algo == Algo::Random);
    CHECK(records[2].rep == 2);
}

TEST_CASE("per-rep seeds are distinct and stable") {
    CHECK(rep_seed(1, "g", Algo::Random, 0) == rep_seed(1, "g", Algo::Random, 0));
    CHECK(rep_seed(1, "g", Algo::Random, 0) != rep_seed(1, "g", Algo::Random, 1));
    CHECK(rep_seed(1, "g", Algo::Random, 0) != rep_seed(1, "g", Algo::Genetic, 0));
    CHECK(rep_seed(1, "g", Algo::Random, 0) != rep_seed(2, "g", Algo::Random, 0));
}

TEST_CASE("untimed runs are byte-identical, and job count does not matter") {
    std::vector<Instance> suite{make_instance("grid", gclass::Grid{4, 5}, Category::N10),
                                make_instance("tree", gclass::Tree{12}, Category::N10, 5),
                                make_instance("gp", gclass::GeneralizedPetersen{6, 2}, Category::N10)};
    AlgoSelection sel;
    sel.trials = 300;
    sel.ga.max_iterations = 20;
    RunOptions opts;
    opts.timing = false;
    const auto a = records_csv(run_matrix(suite, sel, 2, 42, opts));
    const auto b = records_csv(run_matrix(suite, sel, 2, 42, opts));
    CHECK(a == b);
    opts.jobs = 3;
    CHECK(records_csv(run_matrix(suite, sel, 2, 42, opts)) == a);
    CHECK(records_csv(run_matrix(suite, sel, 2, 43, RunOptions{1, false})) != a);
}

TEST_CASE("ratio is only reported against exact known values") {
    std::vector<Instance> suite{make_instance("gp", gclass::GeneralizedPetersen{6, 2}, Category::N10),
                                make_instance("star", gclass::MycielskianStar{4}, Category::N10)};
    AlgoSelection sel;
    sel.algos = {Algo::Hyper};
    auto records = run_matrix(suite, sel, 1, 1, RunOptions{1, false});
    REQUIRE(records.size() == 2);
    CHECK_FALSE(records[0].ratio.has_value());
    CHECK(records[0].known.kind == MuKind::Unknown);
    REQUIRE(records[1].ratio.has_value());
    CHECK(records[1].known.kind == MuKind::Exact);
    CHECK(*records[1].ratio == doctest::Approx(static_cast<double>(*records[1].set_size) / *records[1].known.value));
}

TEST_CASE("solver failures become rows instead of aborting") {
    std::vector<Instance> suite{make_instance("grid", gclass::Grid{5, 5}, Category::N10)};
    AlgoSelection sel;
    sel.algos = {Algo::Exact, Algo::Hyper};
    auto records = run_matrix(suite, sel, 1, 1, RunOptions{1, false});
    REQUIRE(records.size() == 2);
    const auto& exact = records[0];
    CHECK(exact.algo == Algo::Exact);
    CHECK_FALSE(exact.set_size.has_value());
    CHECK_FALSE(exact.feasible);
    CHECK_FALSE(exact.error.empty());
    CHECK(records[1].set_size.has_value());

    sel.algos = {Algo::Exact};
    sel.exact.cap = 30;
    sel.exact.budget = std::chrono::duration<double>(0.0);
    auto timed = run_matrix(suite, sel, 1, 1, RunOptions{1, false});
    REQUIRE(timed.size() == 1);
    CHECK(timed[0].timed_out);
    CHECK_FALSE(timed[0].feasible);
}

TEST_CASE("repair flag makes GA rows feasible") {
    std::vector<Instance> suite{make_instance("grid", gclass::Grid{6, 6}, Category::N10)};
    AlgoSelection sel;
    sel.algos = {Algo::Genetic};
    sel.ga.max_iterations = 20;
    sel.repair = true;
    for (const auto& r : run_matrix(suite, sel, 4, 9, RunOptions{1, false})) CHECK(r.feasible);
}

TEST_CASE("summarize averages per class and rolls up the Mycielskian classes") {
    std::vector<RunRecord> recs{
        record("complete", Algo::Random, 1.0, 0.5),
        record("complete", Algo::Random, 1.0, 1.5),
        record("grid", Algo::Genetic, 3.9, 2.0),
        record("grid", Algo::Genetic, 3.9, 4.0),
        record("mycielskian_cycle", Algo::Hyper, 0.5, 1.0),
        record("mycielskian_star", Algo::Hyper, 1.0, 3.0),
        record("generalized_petersen", Algo::Hyper, std::nullopt, 1.0),
    };
    auto rows = summarize(recs);
    auto find = [&](const std::string& cls) -> const SummaryRow& {
        for (const auto& r : rows)
            if (r.graph_class == cls) return r;
        FAIL("missing row " << cls);
        throw std::logic_error("unreachable");
    };
    CHECK(*find("complete").per_algo.at(Algo::Random).mean_ratio == 1.0);
    CHECK(*find("complete").per_algo.at(Algo::Random).mean_elapsed == doctest::Approx(1.0));
    CHECK(*find("grid").per_algo.at(Algo::Genetic).mean_ratio == doctest::Approx(3.9));
    CHECK(*find(kMycielskianRollup).per_algo.at(Algo::Hyper).mean_ratio == doctest::Approx(0.75));
    CHECK(*find(kMycielskianRollup).per_algo.at(Algo::Hyper).mean_elapsed == doctest::Approx(2.0));
    CHECK_FALSE(find("generalized_petersen").per_algo.at(Algo::Hyper).mean_ratio.has_value());
    CHECK(rows.size() == 6);

    const auto csv = summary_csv(rows);
    CHECK(csv.rfind("class,category,alpha_random,alpha_hyper,alpha_genetic,t_random,t_hyper,t_genetic\n", 0) == 0);
    CHECK(csv.find("\ncomplete,n10,1.000000,,,1.000000,,\n") != std::string::npos);
    CHECK(csv.find("\ngeneralized_petersen,n10,,,,,1.000000,\n") != std::string::npos);
}

TEST_CASE("records csv layout") {
    const auto empty = records_csv({});
    CHECK(empty == std::string(kRecordsHeader) + "\n");
    CHECK(std::string(kRecordsHeader) ==
          "graph_id,class,category,n,m,algo,seed,rep,set_size,feasible,known_kind,known_mu,ratio,elapsed_s,"
          "delta_lb,hyper_lb,avg_dist");

    std::vector<Instance> suite{make_instance("p3", gclass::Path{3}, Category::N10)};
    AlgoSelection sel;
    sel.algos = {Algo::Hyper};
    auto csv = records_csv(run_matrix(suite, sel, 1, 5, RunOptions{1, false}));
    const auto row = csv.substr(csv.find('\n') + 1);
    const auto seed = rep_seed(5, "p3", Algo::Hyper, 0);
    CHECK(row == "p3,path,n10,3,2,hyper," + std::to_string(seed) + ",0,2,true,exact,2,1.000000,,2,1.500000,"
                 "1.333333\n");
}

TEST_CASE("scatter export") {
    CHECK(scatter_csv({}) == "graph_id,class,delta_lb,set_size,algo\n");

    std::vector<Instance> suite{make_instance("gp", gclass::GeneralizedPetersen{50, 2}, Category::N100)};
    AlgoSelection sel;
    sel.algos = {Algo::Hyper};
    auto rows = export_scatter(run_matrix(suite, sel, 1, 1, RunOptions{1, false}));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].delta_lb == 3);
    CHECK(rows[0].graph_class == "generalized_petersen");
    CHECK(rows[0].set_size.has_value());
    CHECK(scatter_csv(rows) ==
          "graph_id,class,delta_lb,set_size,algo\ngp,generalized_petersen,3," + std::to_string(*rows[0].set_size) +
              ",hyper\n");
}
