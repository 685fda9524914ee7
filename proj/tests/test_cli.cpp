#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "support.hpp"
#include "tgcsa/batch.hpp"
#include "tgcsa/index_file.hpp"

using namespace tgcsa;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(TGCSA_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / ("tgcsa_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kFixtureQueries = "D 1 5\nR 3 7\nE 4 5 7\nS 6\nA 5\nX 8\n";

}  // namespace

TEST_CASE("index files round-trip byte for byte") {
    std::mt19937_64 rng(12);
    auto cs = testing_support::random_contacts(rng, 30, 40, 400, true);
    for (auto kind : {PsiCodecKind::plain, PsiCodecKind::vbyte_rle, PsiCodecKind::vbyte_rle_select,
                      PsiCodecKind::huff_rle_opt}) {
        auto idx = build_index(cs, {kind, 32});
        auto bytes = serialize_index(idx);
        auto back = deserialize_index(bytes);
        CHECK(serialize_index(back) == bytes);
        CHECK(back.decode_psi() == idx.decode_psi());
        CHECK(back.size_bits() == idx.size_bits());
        for (std::uint32_t t = 1; t <= cs.lifetime; t += 3) {
            CHECK(snapshot(back, TimeSemantics::at(t)) == snapshot(idx, TimeSemantics::at(t)));
        }
        auto engine = load_engine(bytes);
        CHECK(engine->contacts() == cs.size());
    }
    auto three = build_index(to_arity3(cs, TimeModel::point));
    auto back3 = deserialize_index(serialize_index(three));
    CHECK(back3.arity() == 3);
    CHECK(back3.model() == TimeModel::point);

    auto clean = testing_support::random_contacts(rng, 30, 40, 300, false);
    auto el = EdgeLogIndex::build(clean);
    auto eb = serialize_edgelog(el);
    CHECK(serialize_edgelog(deserialize_edgelog(eb)) == eb);
    CHECK(load_engine(eb)->name() == "edgelog");
}

TEST_CASE("corrupt index files are rejected") {
    auto bytes = serialize_index(build_index(testing_support::g5()));
    auto bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS((void)deserialize_index(bad), FormatError);
    auto cut = bytes;
    cut.resize(cut.size() - 9);
    CHECK_THROWS_AS((void)deserialize_index(cut), FormatError);
    auto version = bytes;
    version[4] = 9;
    CHECK_THROWS_AS((void)deserialize_index(version), FormatError);
    CHECK_THROWS_AS((void)load_engine(std::vector<std::uint8_t>{}), FormatError);
}

TEST_CASE("batch lines") {
    auto qs = parse_batch(std::string("# comment\nD 1 5\nR 3 2 .. 6 w\n\nE 4 5 7 .. 9\nS 6 .. 8 s\nA 5 .. 7\nX 8\n"));
    REQUIRE(qs.size() == 6);
    CHECK(qs[0].op == 'D');
    CHECK(qs[0].sem.kind == TimeSemantics::Kind::instant);
    CHECK(qs[1].sem.kind == TimeSemantics::Kind::weak);
    CHECK(qs[1].sem.t_end == 6);
    CHECK(qs[2].sem.kind == TimeSemantics::Kind::strong);
    CHECK(qs[2].v == 5);
    CHECK(qs[3].line == 6);
    CHECK(qs[4].sem.t_end == 7);
    for (const char* bad : {"Q 1 2\n", "D 1\n", "D 1 5 6\n", "A 3 .. 5 w\n", "S 5 .. 3\n", "D x 5\n"}) {
        CHECK_THROWS_AS((void)parse_batch(std::string(bad)), ParseError);
    }
    try {
        (void)parse_batch(std::string("S 1\nS 2\nE 1 2\n"));
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    TgcsaEngine idx(build_index(testing_support::g5()));
    std::vector<std::string> got;
    for (const auto& q : parse_batch(std::string(kFixtureQueries))) got.push_back(run_query(idx, q).text);
    CHECK(got == std::vector<std::string>{"3 4", "1 4", "false", "(1,3) (1,4) (4,5)", "(1,4) (4,5)",
                                          "(1,3) (1,4) (4,3)"});
    CHECK(format_vertices({}).empty());
    CHECK(count_query(idx, parse_batch(std::string("E 4 5 6\n"))[0]) == 1);
}

TEST_CASE("command line tool") {
    auto dir = scratch();
    auto in = dir / "g5.txt";
    auto idx = dir / "g5.idx";
    auto qs = dir / "q.txt";
    put(in, testing_support::g5_text());
    put(qs, kFixtureQueries);

    auto b = run("build --input " + in.string() + " --output " + idx.string() + " --codec plain --baseline edgelog");
    REQUIRE(b.code == 0);
    CHECK(b.out.find("bpc\t109.600") != std::string::npos);
    CHECK(fs::exists(idx.string() + ".edgelog"));

    auto q = run("query --index " + idx.string() + " --queries " + qs.string());
    CHECK(q.code == 0);
    CHECK(q.out == "3 4\n1 4\nfalse\n(1,3) (1,4) (4,5)\n(1,4) (4,5)\n(1,3) (1,4) (4,3)\n");
    auto qe = run("query --index " + idx.string() + ".edgelog --queries " + qs.string());
    CHECK(qe.out == q.out);

    auto bench = run("bench --index " + idx.string() + " --queries " + qs.string() + " --repeat 2");
    CHECK(bench.code == 0);
    for (const char* line : {"D.results\t2", "R.results\t2", "E.results\t0", "S.results\t3", "A.results\t2",
                             "X.results\t3"}) {
        CHECK(bench.out.find(line) != std::string::npos);
    }

    CHECK(run("build --input " + in.string() + " --output " + (dir / "x").string() + " --tpsi 0").code == 2);
    CHECK(run("build --input " + in.string() + " --output " + (dir / "x").string() + " --arity 3").code == 2);
    CHECK(run("bench --index " + idx.string() + " --queries " + qs.string() + " --repeat 0").code == 2);
    CHECK(run("gen ba --vertices 10 --m 10").code == 2);
    CHECK(run("query --index " + (dir / "missing").string()).code == 2);
    put(dir / "junk.idx", "TGX1 but not really");
    CHECK(run("query --index " + (dir / "junk.idx").string() + " --queries " + qs.string()).code == 1);

    auto g1 = run("gen ba --vertices 50 --m 3 --dist uniform:2 --lifetime 100 --seed 7");
    auto g2 = run("gen ba --vertices 50 --m 3 --dist uniform:2 --lifetime 100 --seed 7");
    CHECK(g1.code == 0);
    CHECK(g1.out == g2.out);
    CHECK(parse_contacts(g1.out).size() > 0);

    auto st = run("stats --input " + in.string() + " --kv");
    CHECK(st.out.find("size_b_bits\t60") != std::string::npos);
    fs::remove_all(dir);
}
