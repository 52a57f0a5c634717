// planwright command-line driver.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planwright/planwright.hpp"

namespace fs = std::filesystem;
using namespace planwright;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeedRange {
    std::uint64_t first = 1;
    std::uint64_t last = 1;
};

SeedRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("--seeds expects A..B, got '" + s + "'");
    try {
        std::size_t used = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        SeedRange r{std::stoull(a, &used), 0};
        if (used != a.size()) throw std::invalid_argument(a);
        r.last = std::stoull(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        if (r.last < r.first) throw UsageError("--seeds range " + s + " is empty");
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("--seeds expects A..B, got '" + s + "'");
    }
}

std::vector<std::uint64_t> seeds_of(const std::optional<std::uint64_t>& seed, const std::string& range, SeedRange fallback) {
    SeedRange r = fallback;
    if (seed) r = {*seed, *seed};
    if (!range.empty()) r = parse_range(range);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = r.first;; ++s) {
        out.push_back(s);
        if (s == r.last) break;
    }
    return out;
}

GenConfig resolve_config(const std::string& flag) {
    std::string path = flag;
    if (path.empty()) {
        if (const char* env = std::getenv("PLANWRIGHT_CONFIG"); env && *env) path = env;
    }
    if (path.empty()) return GenConfig::defaults();
    return load_config(path);
}

std::string plan_name(std::uint64_t seed, const char* ext) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "plan-%06llu%s", static_cast<unsigned long long>(seed), ext);
    return buf;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + p.string());
}

double percentile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size()))) - 1;
    return v[std::min(k, v.size() - 1)];
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---- subcommands

struct GenerateOpts {
    std::optional<std::uint64_t> seed;
    std::string seeds;
    std::string config;
    std::string out = ".";
    std::string format = "both";
    bool trace = false;
};

int run_generate(const GenerateOpts& o) {
    const GenConfig cfg = resolve_config(o.config);
    const auto seeds = seeds_of(o.seed, o.seeds, {1, 1});
    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec || !fs::is_directory(o.out)) throw UsageError("cannot create output directory " + o.out);
    const bool json = o.format != "svg", svg = o.format != "json";

    std::size_t ok = 0, failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (auto seed : seeds) {
        GenerationTrace trace;
        try {
            const FloorPlan plan = generate(seed, cfg, o.trace ? &trace : nullptr);
            if (json) write_file(fs::path(o.out) / plan_name(seed, ".json"), to_json(plan));
            if (svg) write_file(fs::path(o.out) / plan_name(seed, ".svg"), to_svg(plan));
            if (o.trace) write_file(fs::path(o.out) / plan_name(seed, ".trace.json"), dump_json(trace_to_json(trace)));
            ++ok;
        } catch (const GenerationError& e) {
            std::cerr << "error: " << e.what() << "\n";
            ++failed;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("generated %zu plans, %zu failed, %.3f s\n", ok, failed, secs);
    return failed ? kFailed : kOk;
}

struct ValidateOpts {
    std::vector<std::string> inputs;
    std::string config;
};

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(in)) {
                const auto name = e.path().filename().string();
                if (e.path().extension() == ".json" && name.find(".trace.") == std::string::npos) found.push_back(e.path());
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.emplace_back(in);
        }
    }
    return files;
}

int run_validate(const ValidateOpts& o) {
    const GenConfig cfg = resolve_config(o.config);
    const auto files = expand_inputs(o.inputs);
    if (files.empty()) {
        std::cerr << "warning: no input files\n";
        return kOk;
    }
    std::size_t failed = 0;
    for (const auto& f : files) {
        std::string code, message;
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            code = "io";
            message = "cannot read file";
        } else {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                const auto report = validate(from_json(ss.str()), cfg);
                if (!report.ok()) {
                    code = report.issues.front().code;
                    message = report.issues.front().message;
                }
            } catch (const PlanParseError& e) {
                code = "parse";
                message = e.what();
            }
        }
        if (code.empty()) {
            std::printf("PASS %s\n", f.string().c_str());
        } else {
            ++failed;
            std::printf("FAIL %s: %s: %s\n", f.string().c_str(), code.c_str(), message.c_str());
        }
    }
    std::printf("%zu checked, %zu failed\n", files.size(), failed);
    return failed ? kFailed : kOk;
}

struct BenchOpts {
    std::size_t count = 1000;
    std::uint64_t first = 1;
    std::string config;
    std::string out;
    bool trace = false;
};

int run_bench(const BenchOpts& o) {
    const GenConfig cfg = resolve_config(o.config);
    if (o.count == 0) throw UsageError("--count must be >= 1");
    std::vector<double> ms;
    std::vector<double> candidates, attempts;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.count; ++i) {
        const std::uint64_t seed = o.first + i;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const FloorPlan p = generate(seed, cfg);
            ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
            attempts.push_back(p.info.attempts);
            candidates.push_back(p.info.corridor_candidates);
        } catch (const GenerationError&) {
            ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
            ++failures;
        }
    }
    nlohmann::ordered_json r;
    r["count"] = o.count;
    r["first_seed"] = o.first;
    r["failures"] = failures;
    r["median_ms"] = median(ms);
    r["p95_ms"] = percentile(ms, 0.95);
    r["max_ms"] = *std::max_element(ms.begin(), ms.end());
    r["mean_attempts"] = attempts.empty() ? 0.0 : std::accumulate(attempts.begin(), attempts.end(), 0.0) / static_cast<double>(attempts.size());
    if (o.trace) {
        std::size_t with = 0;
        for (double c : candidates) with += c > 0 ? 1 : 0;
        r["corridor_candidates"] = {
            {"plans_with_corridor", with},
            {"mean", candidates.empty() ? 0.0 : std::accumulate(candidates.begin(), candidates.end(), 0.0) / static_cast<double>(candidates.size())},
            {"max", candidates.empty() ? 0 : static_cast<std::int64_t>(*std::max_element(candidates.begin(), candidates.end()))}};
    }
    const std::string text = dump_json(r);
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
    return kOk;
}

struct GalleryOpts {
    std::string seeds = "1..15";
    std::string config;
    std::string out = "gallery.svg";
    int columns = 5;
};

int run_gallery(const GalleryOpts& o) {
    const GenConfig cfg = resolve_config(o.config);
    const auto seeds = seeds_of(std::nullopt, o.seeds, {1, 15});
    std::vector<FloorPlan> plans;
    std::size_t failed = 0;
    for (auto s : seeds) {
        try {
            plans.push_back(generate(s, cfg));
        } catch (const GenerationError& e) {
            std::cerr << "error: " << e.what() << "\n";
            ++failed;
        }
    }
    const fs::path out(o.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_file(out, gallery_svg(plans, o.columns));
    std::printf("gallery of %zu plans written to %s\n", plans.size(), o.out.c_str());
    return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planwright: seed-driven floor plan generator"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* g = app.add_subcommand("generate", "generate plans as JSON and/or SVG");
    auto* seed_opt = g->add_option("--seed", gen.seed, "single seed");
    g->add_option("--seeds", gen.seeds, "inclusive seed range A..B")->excludes(seed_opt);
    g->add_option("--config", gen.config, "config JSON (default: $PLANWRIGHT_CONFIG, else built-in)");
    g->add_option("--out", gen.out, "output directory")->capture_default_str();
    g->add_option("--format", gen.format, "json, svg or both")->check(CLI::IsMember({"json", "svg", "both"}))->capture_default_str();
    g->add_flag("--trace", gen.trace, "also write plan-NNNNNN.trace.json with corridor details");

    ValidateOpts val;
    auto* v = app.add_subcommand("validate", "check plan JSON files or directories");
    v->add_option("inputs", val.inputs, "files or directories");
    v->add_option("--config", val.config, "config JSON used for opening widths and rules");

    BenchOpts bench;
    auto* b = app.add_subcommand("bench", "time plan generation");
    b->add_option("--count", bench.count, "number of seeds")->capture_default_str();
    b->add_option("--first-seed", bench.first, "first seed")->capture_default_str();
    b->add_option("--config", bench.config, "config JSON");
    b->add_option("--out", bench.out, "write the report here instead of stdout");
    b->add_flag("--trace", bench.trace, "add corridor candidate counts");

    GalleryOpts gal;
    auto* y = app.add_subcommand("gallery", "contact sheet of plans as one SVG");
    y->add_option("--seeds", gal.seeds, "inclusive seed range A..B")->capture_default_str();
    y->add_option("--config", gal.config, "config JSON");
    y->add_option("--out", gal.out, "output SVG path")->capture_default_str();
    y->add_option("--columns", gal.columns, "plans per row")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*g) return run_generate(gen);
        if (*v) return run_validate(val);
        if (*b) return run_bench(bench);
        if (*y) return run_gallery(gal);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
