#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "commands.hpp"
#include "doctest.h"
#include "ffactor/serialization.hpp"

using namespace ffactor;
namespace fs = std::filesystem;

namespace {
  struct Result {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result             r;
    r.code = cli::run(args, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  // Scratch directory removed on scope exit.
  struct Scratch {
    fs::path dir;
    Scratch() {
      static std::atomic<int> serial{0};
      dir = fs::temp_directory_path() / ("ffactor-cli-" + std::to_string(::getpid()) + "-" + std::to_string(serial++));
      fs::create_directories(dir);
    }
    ~Scratch() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
    std::string file(std::string const& name, std::string const& body) const {
      auto path = dir / name;
      std::ofstream(path) << body;
      return path.string();
    }
  };

  char const* const xx_pair = R"({"G": {"generators": ["x", "y"], "relators": []}, "H": ["x x"]})";
  char const* const c2c3_graph = R"({
    "vertices": {"u": {"kind": "cyclic", "n": 2}, "v": "C3"},
    "edges": [{"id": "e", "from": "u", "to": "v", "group": "trivial", "iota": [0], "tau": [0]}]
  })";
}  // namespace

TEST_CASE("scan exits 1 on a refutation") {
  Scratch s;
  auto    r = run({"scan", "--input", s.file("xx.json", xx_pair), "--json"});
  CHECK(r.code == cli::exit_refuted);
  auto j = Json::parse(r.out);
  CHECK(j["command"] == "scan");
  CHECK(j["result"]["outcome"] == "NOT_FREE_FACTOR");
  CHECK(j["result"]["witness_group"] == "cyclic-2");

  auto text = run({"scan", "--input", s.file("xx.json", xx_pair)});
  CHECK(text.code == cli::exit_refuted);
  CHECK(text.out.find("verdict: NOT_FREE_FACTOR") != std::string::npos);
}

TEST_CASE("primitive command") {
  auto r = run({"primitive", "x y", "--json"});
  CHECK(r.code == cli::exit_ok);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["primitive"] == true);
  CHECK(j["result"]["decision"] == "FREE_FACTOR");
  CHECK(j["result"]["scan"]["outcome"] == "NO_WITNESS_UP_TO");

  auto c = Json::parse(run({"primitive", "x y x^-1 y^-1", "--json", "--max-order", "6"}).out);
  CHECK(c["result"]["primitive"] == false);
  CHECK(c["result"]["decision"] == "NOT_FREE_FACTOR");

  auto p = Json::parse(run({"primitive", "x", "--rank", "3", "--json"}).out);
  CHECK(p["result"]["rank"] == 3);
  CHECK(p["result"]["minimal_word"] == "x");
}

TEST_CASE("gog command") {
  Scratch s;
  auto    r = run({"gog", "--input", s.file("g.json", c2c3_graph), "--json"});
  CHECK(r.code == cli::exit_ok);
  auto j  = Json::parse(r.out);
  auto fp = presentation_from_json(j["result"]["fundamental"]["presentation"]);
  CHECK(fp.str() == "< a, b | a a, b b b >");
  CHECK(j["result"]["trivial_edge_factors"] == Json::array({"u", "v"}));

  auto bad = run({"gog", "--input",
                  s.file("bad.json", R"({"vertices": {"u": "C2"}, "edges": [{"id": "e", "from": "u", "to": "w",
                                        "group": "C2", "iota": [0, 1], "tau": [0, 1]}]})"),
                  "--json"});
  CHECK(bad.code == cli::exit_error);
  CHECK(Json::parse(bad.out)["result"]["valid"] == false);
}

TEST_CASE("homcount, constancy and measure") {
  Scratch s;
  auto    h = Json::parse(run({"homcount", "--json", "--input",
                               s.file("h.json", R"({"presentation": {"generators": ["a", "b"],
                                 "relators": ["a a", "b b b"]}, "group": "S3"})")})
                           .out);
  CHECK(h["result"][0]["total"] == 12);
  auto e = Json::parse(run({"homcount", "--json", "--epi", "--input",
                            s.file("e.json", R"({"presentation": {"generators": ["x", "y"]}, "group": "C2"})")})
                           .out);
  CHECK(e["result"][0]["total"] == 3);

  auto c = Json::parse(run({"constancy", "--json", "--input",
                            s.file("c.json", R"({"G": {"generators": ["a", "b"], "relators": ["a a", "b b"]},
                              "H": {"presentation": {"generators": ["h"]}, "embedding": {"h": "a b"}},
                              "group": "S3"})")})
                           .out);
  Json counts = Json::array();
  for (auto const& row : c["result"][0]["counts"]) {
    counts.push_back(row["h"]);
  }
  CHECK(counts == Json::array({4, 3, 3, 2, 2, 2}));

  auto m = Json::parse(run({"measure", "x y x^-1 y^-1", "--degree", "3", "--catalog", "S3", "--json"}).out);
  CHECK(m["result"]["distributions"][0]["counts"] == Json::array({18, 9, 9, 0, 0, 0}));
  CHECK(m["result"]["distributions"][0]["deviation"] == Json::parse(R"({"num": 1, "den": 2})"));
  CHECK(m["result"]["expected_fixed_points"] == Json::parse(R"({"num": 3, "den": 2})"));
}

TEST_CASE("output does not depend on workers or the cache") {
  Scratch     s;
  auto const  input = s.file("xx.json", R"({"G": {"generators": ["x", "y"], "relators": []},
                                            "H": ["x y x^-1 y^-1"]})");
  auto const  cache = (s.dir / "cache").string();
  std::string reference;
  for (auto const* w : {"1", "2", "8"}) {
    for (bool cached : {false, true, true}) {
      std::vector<std::string> args{"constancy", "--input", input, "--json", "--workers", w};
      if (cached) {
        args.insert(args.end(), {"--cache", cache});
      }
      auto r = run(args);
      CHECK(r.code == cli::exit_ok);
      if (reference.empty()) {
        reference = r.out;
      }
      CHECK(r.out == reference);
    }
  }
  CHECK(fs::exists(cache));
  CHECK(!fs::is_empty(cache));
}

TEST_CASE("JSON output round trips") {
  auto const r = run({"measure", "x x y", "--catalog", "C2,S3", "--json"});
  auto const j = Json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("errors exit 2") {
  Scratch s;
  auto    missing = run({"scan", "--json", "--input", s.file("m.json", R"({"G": {"generators": ["x"]}})")});
  CHECK(missing.code == cli::exit_error);
  CHECK(Json::parse(missing.out).contains("error"));

  auto bad_word = run({"primitive", "x ^", "--json"});
  CHECK(bad_word.code == cli::exit_error);
  CHECK(Json::parse(bad_word.out)["error"]["kind"] == "input");

  auto bad_embed = run({"scan", "--json", "--input",
                        s.file("b.json", R"({"G": {"generators": ["x", "y"]},
                          "H": {"presentation": {"generators": ["h"], "relators": ["h h"]}, "embedding": ["x"]}})")});
  CHECK(bad_embed.code == cli::exit_error);

  auto text = run({"homcount", "--input", s.file("n.json", "not json")});
  CHECK(text.code == cli::exit_error);
  CHECK(text.err.find("format") != std::string::npos);

  CHECK(run({"scan", "--catalog", "C7x"}).code == cli::exit_error);
  CHECK(run({"frobnicate"}).code != cli::exit_ok);
  CHECK(run({"scan", "--workers", "0", "--input", s.file("xx.json", xx_pair)}).code == cli::exit_error);
}

TEST_CASE("selftest") {
  Scratch s;
  auto    r = run({"selftest", "--json", "--cache", (s.dir / "c").string(), "--max-order", "8"});
  CHECK(r.code == cli::exit_ok);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["checks"].size() == 8);
}

TEST_CASE("group descriptors") {
  CHECK(group_from_json(Json("D4")).order() == 8);
  CHECK(group_from_json(Json("C2xC2")).name() == "cyclic-2 x cyclic-2");
  CHECK(group_from_json(Json("Q8")).order() == 8);
  CHECK(group_from_json(Json::parse(R"({"kind": "alternating", "n": 4})")).order() == 12);
  CHECK(group_from_json(Json::parse(R"({"kind": "product", "factors": ["C2", {"kind": "symmetric", "n": 3}]})"))
            .order() == 12);
  CHECK(group_from_json(Json::parse(R"({"kind": "perm", "degree": 4, "generators": [[1, 2, 3, 0]]})")).order() == 4);
  CHECK(group_from_json(Json::parse(R"({"kind": "table", "table": [[0, 1], [1, 0]]})")).order() == 2);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind": "monster"})")), FormatError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind": "table", "table": [[0, 1], [0, 0]]})")), GroupError);
  CHECK(catalog_from_names("S3, C2,Q8").front().name() == "cyclic-2");
  CHECK(catalog_up_to(4).size() == 4);
}

TEST_CASE("subgroup descriptors") {
  auto const g = presentation_from_json(Json::parse(R"({"generators": ["a", "b"], "relators": ["a a", "b b b"]})"));
  auto const h = subgroup_from_json(
      Json::parse(R"({"presentation": {"generators": ["s", "t"], "relators": ["s s"]}, "embedding": {"t": "b", "s": "a"}})"),
      g);
  CHECK(h.embedding.at(0).str() == "a");
  CHECK(h.embedding.at(1).str() == "b");
  CHECK(subgroup_from_json(to_json(h), g).embedding.at(1).str() == "b");
  CHECK_THROWS_AS(subgroup_from_json(Json::parse(R"({"presentation": {"generators": ["s"]}, "embedding": {}})"), g),
                  FormatError);
  CHECK_THROWS(subgroup_from_json(Json::parse(R"({"presentation": {"generators": ["s"]}, "embedding": ["c"]})"), g));
}
