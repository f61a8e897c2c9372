// Command line front end: segment scanned pages, generate synthetic corpora,
// score predicted cut points against ground truth, and dump per-word
// diagnostics. Exit codes: 0 success, 1 bad input or I/O failure, 2 an
// evaluation fell below --fail-under.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipiseg/lipiseg.hpp"

namespace {

using namespace lipiseg;

std::string index4(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d", i);
    return buf;
}

BinarizeMethod parse_binarize(const std::string& spec) {
    if (spec == "otsu") return BinarizeMethod::otsu();
    if (spec.rfind("fixed:", 0) == 0) {
        std::size_t used = 0;
        int t = std::stoi(spec.substr(6), &used);
        if (used != spec.size() - 6) throw std::runtime_error("bad threshold in '" + spec + "'");
        return BinarizeMethod::fixed(t);
    }
    throw std::runtime_error("unknown binarization '" + spec + "', expected otsu or fixed:<n>");
}

struct SegmentOptions {
    std::string input;
    std::string out_dir;
    std::string binarize_spec = "otsu";
    std::vector<double> alphas;
    PipelineParams params;
    bool overlay = false;
};

int run_segment(const SegmentOptions& opt) {
    PipelineParams params = opt.params;
    if (!opt.alphas.empty()) {
        for (std::size_t i = 0; i < 6; ++i) params.seg.alphas[i] = opt.alphas[i];
    }

    const GrayImage gray = load_pgm(opt.input);
    const BinaryImage page = binarize(gray, parse_binarize(opt.binarize_spec));
    const std::string stem = std::filesystem::path(opt.input).stem().string();
    const PageResult result = run_page(page, params, stem + "/");

    AnnotationSet layout;
    AnnotationSet cuts;
    for (std::size_t i = 0; i < result.page.lines.size(); ++i)
        layout.lines.push_back(LineRecord{
            static_cast<int>(i),
            RowSpan{result.page.lines[i].top, result.page.lines[i].bottom}});
    int segment_count = 0;
    for (const WordResult& wr : result.words) {
        layout.words.push_back(
            WordRecord{wr.id, Rect{wr.box.left, wr.box.top, wr.box.right, wr.box.bottom}});
        if (wr.headline)
            layout.headlines.push_back(HeadlineRecord{
                wr.id, RowSpan{wr.box.top + wr.headline->rows.top,
                               wr.box.top + wr.headline->rows.bottom}});
        for (int cut : wr.cut_columns) cuts.cuts.push_back(CutAnnotation{wr.id, cut});
        segment_count += static_cast<int>(wr.segments.size());
    }

    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    save_annotations(dir / (stem + "_segmentation.txt"), layout);
    save_annotations(dir / (stem + "_cuts.txt"), cuts);
    if (opt.overlay) save_ppm(dir / (stem + "_overlay.ppm"), render_page_overlay(page, result));

    std::cout << stem << ": lines " << result.page.lines.size() << ", words "
              << result.words.size() << ", cuts " << cuts.cuts.size() << ", segments "
              << segment_count << "\n";
    return 0;
}

struct EvaluateOptions {
    std::string pred_file;
    std::string gt_file;
    int tolerance = 3;
    double fail_under = 0.0;
};

int run_evaluate(const EvaluateOptions& opt) {
    const AnnotationSet pred = load_annotations(opt.pred_file);
    const AnnotationSet gt = load_annotations(opt.gt_file);
    const EvalReport report = evaluate_cuts(pred.cuts, gt.cuts, opt.tolerance);

    std::cout << "total_gt " << report.total_gt << "\n"
              << "matched " << report.matched << "\n"
              << "spurious " << report.spurious << "\n"
              << std::fixed << std::setprecision(4) << "success_rate " << report.success_rate
              << "\n"
              << "precision " << report.precision << "\n"
              << "tolerance " << report.tolerance << "\n";
    return report.success_rate < opt.fail_under ? 2 : 0;
}

struct SynthOptions {
    std::uint64_t seed = 1;
    int count = 10;
    std::string out_dir;
    std::string kind = "page";
    SynthParams params;
};

int run_synth(const SynthOptions& opt) {
    SynthParams params = opt.params;
    params.seed = opt.seed;
    params.count = opt.count;
    validate(params);

    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    SplitMix64 rng(params.seed);

    for (int i = 0; i < params.count; ++i) {
        if (opt.kind == "word") {
            const std::string stem = "word_" + index4(i);
            SynthWord word = synth_word(params, rng);
            save_pgm(dir / (stem + ".pgm"), gray_from_binary(word.image));

            AnnotationSet truth;
            const std::string id = stem + "/L0W0";
            truth.words.push_back(WordRecord{
                id, Rect{0, 0, word.image.width() - 1, word.image.height() - 1}});
            truth.headlines.push_back(HeadlineRecord{id, word.headline});
            for (int cut : word.cut_xs) truth.cuts.push_back(CutAnnotation{id, cut});
            save_annotations(dir / (stem + ".gt.txt"), truth);
        } else {
            const std::string stem = "page_" + index4(i);
            SynthPage page = synth_page(params, rng);
            save_pgm(dir / (stem + ".pgm"), gray_from_binary(page.image));

            AnnotationSet truth;
            for (std::size_t li = 0; li < page.lines.size(); ++li)
                truth.lines.push_back(LineRecord{static_cast<int>(li), page.lines[li]});
            for (const PageWordTruth& w : page.words) {
                const std::string id = stem + "/" + w.id;
                truth.words.push_back(WordRecord{id, w.box});
                truth.headlines.push_back(HeadlineRecord{id, w.headline});
                for (int cut : w.cut_xs) truth.cuts.push_back(CutAnnotation{id, cut});
            }
            save_annotations(dir / (stem + ".gt.txt"), truth);
        }
    }
    std::cout << "wrote " << params.count << " " << opt.kind << (params.count == 1 ? "" : "s")
              << " to " << dir.string() << "\n";
    return 0;
}

struct InspectOptions {
    std::string input;
    std::string binarize_spec = "otsu";
    double w = 0.7;
};

int run_inspect(const InspectOptions& opt) {
    const GrayImage gray = load_pgm(opt.input);
    const BinaryImage word = binarize(gray, parse_binarize(opt.binarize_spec));

    std::cout << "image " << word.width() << "x" << word.height() << " ink " << word.ink_count()
              << "\n";

    std::cout << "row_profile";
    for (int c : horizontal_profile(word).counts) std::cout << " " << c;
    std::cout << "\ncol_profile";
    for (int c : vertical_profile(word).counts) std::cout << " " << c;
    std::cout << "\n";

    const RegionBands regions = format_regions(0, word.height() - 1);
    for (int i = 0; i < 4; ++i)
        std::cout << "region " << i + 1 << " rows " << regions.r[static_cast<std::size_t>(i)].top
                  << " " << regions.r[static_cast<std::size_t>(i)].bottom << "\n";

    const auto headline = estimate_headline(word, regions, opt.w);
    if (!headline) {
        std::cout << "headline none\n";
        return 0;
    }
    std::cout << "headline rows " << headline->rows.top << " " << headline->rows.bottom
              << " max_row " << headline->max_row << " max_count " << headline->max_count << "\n";

    const FeatureMatrix features = compute_features(word, regions, *headline);
    const WeightProfile weights = weightage(features);
    std::cout << "columns x f1 f2 f3 f4 f5 f6 weight\n" << std::fixed << std::setprecision(3);
    for (std::size_t x = 0; x < features.columns.size(); ++x) {
        std::cout << x;
        for (double f : features.columns[x]) std::cout << " " << f;
        std::cout << " " << weights.weights[x] << "\n";
    }
    for (const CutStrip& s : find_cut_strips(weights))
        std::cout << "strip " << s.left << " " << s.right << " peak " << s.peak_col << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Head-line based word segmentation for scanned handwritten pages"};
    app.require_subcommand(1);

    SegmentOptions seg;
    CLI::App* seg_cmd = app.add_subcommand("segment", "Segment a page image into lines, words, and character pieces");
    seg_cmd->add_option("--input", seg.input, "Input page (PGM, P2 or P5)")->required();
    seg_cmd->add_option("--out", seg.out_dir, "Output directory")->required();
    seg_cmd->add_option("--k1", seg.params.page.k1, "Line profile threshold, 0 = width/100");
    seg_cmd->add_option("--k2", seg.params.page.k2, "Word profile threshold");
    seg_cmd->add_option("--min-gap", seg.params.page.min_gap,
                        "Word gap in columns, 0 = line height/4");
    seg_cmd->add_option("--smoothing", seg.params.page.smoothing, "Line profile smoothing window");
    seg_cmd->add_option("--w", seg.params.w, "Head-line band extension factor");
    seg_cmd->add_option("--delta", seg.params.seg.delta, "Cut weight threshold");
    seg_cmd->add_option("--alphas", seg.alphas, "Six feature weights a1,...,a6")
        ->delimiter(',')
        ->expected(6);
    seg_cmd->add_option("--min-strip", seg.params.seg.min_strip, "Minimum cut strip width");
    seg_cmd->add_option("--noise-area", seg.params.seg.noise_area,
                        "Noise area in pixels, 0 = word area/2000");
    seg_cmd->add_option("--overlap-frac", seg.params.seg.overlap_frac,
                        "Column overlap needed to attach a satellite segment");
    seg_cmd->add_option("--binarize", seg.binarize_spec, "otsu or fixed:<threshold>");
    seg_cmd->add_flag("--overlay", seg.overlay, "Also write a diagnostic overlay image");

    EvaluateOptions ev;
    CLI::App* ev_cmd = app.add_subcommand("evaluate", "Score predicted cuts against ground truth");
    ev_cmd->add_option("--pred", ev.pred_file, "Predicted cut annotations")->required();
    ev_cmd->add_option("--gt", ev.gt_file, "Ground truth annotations")->required();
    ev_cmd->add_option("--tolerance", ev.tolerance, "Match distance in columns");
    ev_cmd->add_option("--fail-under", ev.fail_under, "Exit 2 if the success rate is lower");

    SynthOptions sy;
    CLI::App* sy_cmd = app.add_subcommand("synth", "Generate a synthetic corpus with ground truth");
    sy_cmd->add_option("--seed", sy.seed, "Generator seed");
    sy_cmd->add_option("--count", sy.count, "Number of images");
    sy_cmd->add_option("--out", sy.out_dir, "Output directory")->required();
    sy_cmd->add_option("--kind", sy.kind, "word or page")
        ->check(CLI::IsMember({"word", "page"}));

    InspectOptions in;
    CLI::App* in_cmd = app.add_subcommand("inspect", "Dump profiles, regions, and cut evidence for one word image");
    in_cmd->add_option("--input", in.input, "Word image (PGM)")->required();
    in_cmd->add_option("--binarize", in.binarize_spec, "otsu or fixed:<threshold>");
    in_cmd->add_option("--w", in.w, "Head-line band extension factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*seg_cmd) return run_segment(seg);
        if (*ev_cmd) return run_evaluate(ev);
        if (*sy_cmd) return run_synth(sy);
        if (*in_cmd) return run_inspect(in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
