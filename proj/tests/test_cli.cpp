#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "lipiseg/annotation.hpp"
#include "lipiseg/pnm.hpp"
#include "lipiseg/synth.hpp"

using namespace lipiseg;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LIPISEG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[512];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("lipiseg_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("segment --help").exit_code == 0);
}

TEST_CASE("missing arguments and unknown commands fail with code 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("segment").exit_code == 1);
    CHECK(run_cli("transmogrify --input x").exit_code == 1);
    CHECK(run_cli("synth --out /tmp/x --kind banana").exit_code == 1);
}

TEST_CASE("segmenting a missing or malformed input fails with code 1") {
    fs::path dir = scratch_dir("badinput");
    RunResult r = run_cli("segment --input " + (dir / "absent.pgm").string() + " --out " +
                          dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error:") != std::string::npos);

    fs::path garbage = dir / "garbage.pgm";
    write_file_atomic(garbage, "P5\n-1 4\n255\n");
    r = run_cli("segment --input " + garbage.string() + " --out " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("at byte offset") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("an all-white page segments to zero words") {
    fs::path dir = scratch_dir("white");
    fs::path page = dir / "blank.pgm";
    save_pgm(page, GrayImage(40, 30)); // constructed white
    RunResult r = run_cli("segment --input " + page.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("words 0") != std::string::npos);

    AnnotationSet layout = load_annotations(dir / "blank_segmentation.txt");
    CHECK(layout.lines.empty());
    CHECK(layout.words.empty());
    AnnotationSet cuts = load_annotations(dir / "blank_cuts.txt");
    CHECK(cuts.cuts.empty());
    fs::remove_all(dir);
}

TEST_CASE("synth then segment recovers the generated words") {
    fs::path dir = scratch_dir("roundtrip");
    RunResult synth = run_cli("synth --seed 11 --count 2 --kind page --out " + dir.string());
    REQUIRE(synth.exit_code == 0);
    REQUIRE(fs::exists(dir / "page_0000.pgm"));
    REQUIRE(fs::exists(dir / "page_0001.gt.txt"));

    RunResult seg = run_cli("segment --input " + (dir / "page_0000.pgm").string() +
                            " --out " + dir.string() + " --overlay");
    REQUIRE(seg.exit_code == 0);
    REQUIRE(fs::exists(dir / "page_0000_segmentation.txt"));
    REQUIRE(fs::exists(dir / "page_0000_overlay.ppm"));

    AnnotationSet gt = load_annotations(dir / "page_0000.gt.txt");
    AnnotationSet got = load_annotations(dir / "page_0000_segmentation.txt");
    REQUIRE(got.words.size() == gt.words.size());
    for (std::size_t i = 0; i < got.words.size(); ++i) {
        CHECK(got.words[i].id == gt.words[i].id);
        CHECK(got.words[i].box == gt.words[i].box);
    }

    // Scoring the pipeline's cuts against the generator's truth is perfect
    // on this seed, and the report format is stable.
    RunResult ev = run_cli("evaluate --pred " + (dir / "page_0000_cuts.txt").string() +
                           " --gt " + (dir / "page_0000.gt.txt").string());
    CHECK(ev.exit_code == 0);
    CHECK(ev.output.find("success_rate 1.0000") != std::string::npos);
    CHECK(ev.output.find("precision 1.0000") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("evaluate exits 2 when the success rate is below the bar") {
    fs::path dir = scratch_dir("failunder");
    AnnotationSet gt;
    gt.cuts = {{"w", 10}, {"w", 30}};
    AnnotationSet pred;
    pred.cuts = {{"w", 10}};
    save_annotations(dir / "gt.txt", gt);
    save_annotations(dir / "pred.txt", pred);

    std::string base = "evaluate --pred " + (dir / "pred.txt").string() + " --gt " +
                       (dir / "gt.txt").string();
    RunResult r = run_cli(base + " --fail-under 0.9");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("success_rate 0.5000") != std::string::npos);
    CHECK(run_cli(base + " --fail-under 0.4").exit_code == 0);
    CHECK(run_cli("evaluate --pred " + (dir / "nothere.txt").string() + " --gt " +
                  (dir / "gt.txt").string())
              .exit_code == 1);
    fs::remove_all(dir);
}

TEST_CASE("word corpora carry their cut truth") {
    fs::path dir = scratch_dir("words");
    RunResult r = run_cli("synth --seed 5 --count 3 --kind word --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    for (int i = 0; i < 3; ++i) {
        fs::path img = dir / ("word_000" + std::to_string(i) + ".pgm");
        fs::path gt = dir / ("word_000" + std::to_string(i) + ".gt.txt");
        REQUIRE(fs::exists(img));
        REQUIRE(fs::exists(gt));
        AnnotationSet truth = load_annotations(gt);
        REQUIRE(truth.words.size() == 1);
        REQUIRE(truth.headlines.size() == 1);
        GrayImage gray = load_pgm(img);
        CHECK(truth.words[0].box.x1 == gray.width() - 1);
        CHECK(truth.words[0].box.y1 == gray.height() - 1);
    }
    fs::remove_all(dir);
}

TEST_CASE("inspect dumps the per-column evidence") {
    fs::path dir = scratch_dir("inspect");
    SynthParams p;
    SplitMix64 rng(404);
    SynthWord word = synth_word(p, rng);
    fs::path img = dir / "word.pgm";
    save_pgm(img, gray_from_binary(word.image));

    RunResult r = run_cli("inspect --input " + img.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("headline rows") != std::string::npos);
    CHECK(r.output.find("columns x f1 f2 f3 f4 f5 f6 weight") != std::string::npos);
    CHECK(r.output.find("strip ") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("repeated runs produce byte-identical outputs") {
    fs::path a = scratch_dir("det_a");
    fs::path b = scratch_dir("det_b");
    REQUIRE(run_cli("synth --seed 9 --count 1 --kind page --out " + a.string()).exit_code == 0);
    REQUIRE(run_cli("synth --seed 9 --count 1 --kind page --out " + b.string()).exit_code == 0);
    CHECK(read_file(a / "page_0000.pgm") == read_file(b / "page_0000.pgm"));
    CHECK(read_file(a / "page_0000.gt.txt") == read_file(b / "page_0000.gt.txt"));

    std::string seg_a = "segment --input " + (a / "page_0000.pgm").string() + " --out " +
                        a.string() + " --overlay";
    std::string seg_b = "segment --input " + (b / "page_0000.pgm").string() + " --out " +
                        b.string() + " --overlay";
    REQUIRE(run_cli(seg_a).exit_code == 0);
    REQUIRE(run_cli(seg_b).exit_code == 0);
    for (const char* name : {"page_0000_segmentation.txt", "page_0000_cuts.txt",
                             "page_0000_overlay.ppm"})
        CHECK(read_file(a / name) == read_file(b / name));
    fs::remove_all(a);
    fs::remove_all(b);
}
