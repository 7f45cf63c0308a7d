/*
 *   Copyright 2026 The shufcong Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shufcong/compat.hpp"
#include "shufcong/congruence.hpp"
#include "shufcong/errors.hpp"
#include "shufcong/magnus.hpp"
#include "shufcong/poly.hpp"
#include "shufcong/presentation.hpp"
#include "shufcong/trace.hpp"

namespace shufcong::cli {

using json = nlohmann::ordered_json;

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

const std::vector<std::string> kCommands = {"check",  "classify", "partition",           "weight",
                                            "magnus", "qroot",    "lyndon",              "primitive-binomials",
                                            "cancel-search",      "verify-witness"};

struct Options {
    std::string command;
    std::string file;
    bool json = false;
    std::optional<std::size_t> cap;
    std::optional<std::uint64_t> max_weight;
    std::optional<std::uint64_t> q;
    std::optional<std::size_t> maxlen;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_class_size;
    std::string theta;
    std::string word;
    std::string series;
    std::string witness;
    std::string semiring;
    std::string convention = "cumulative";
};

struct Input {
    Presentation presentation;
    Semiring k = Semiring::integers();
    ContextOptions context;
};

struct Outcome {
    json verdict;
    std::string text;
};

class Analysis {
public:
    Analysis(const Options& opts, const Input& in, json& params) : opts_(opts), in_(in), params_(params) {}

    Outcome run() {
        const std::map<std::string, Outcome (Analysis::*)()> table = {
            {"check", &Analysis::check},
            {"classify", &Analysis::classify},
            {"partition", &Analysis::partition},
            {"weight", &Analysis::weight},
            {"magnus", &Analysis::magnus},
            {"qroot", &Analysis::qroot},
            {"lyndon", &Analysis::lyndon},
            {"primitive-binomials", &Analysis::primitive_binomials},
            {"cancel-search", &Analysis::cancel_search},
            {"verify-witness", &Analysis::verify},
        };
        return (this->*table.at(opts_.command))();
    }

private:
    const Alphabet& alphabet() const { return in_.presentation.alphabet(); }
    std::string fmt(const Word& w) const { return alphabet().format(w); }

    json relator_json(const Relator& r) const { return json::array({fmt(r.first), fmt(r.second)}); }

    json relators_json(const std::vector<Relator>& rs) const {
        json out = json::array();
        for (const auto& r : rs) out.push_back(relator_json(r));
        return out;
    }

    json witness_json(const CompatWitness& w) const {
        return json{{"relator", relator_json(w.relator)},
                    {"left", fmt(w.left)},
                    {"right", fmt(w.right)},
                    {"coeff_u", in_.k.format(w.coeff_u)},
                    {"coeff_v", in_.k.format(w.coeff_v)}};
    }

    std::string witness_text(const CompatWitness& w) const {
        return "witness: relator " + format_relator(alphabet(), w.relator) + ", class pair [" + fmt(w.left) +
               "] (x) [" + fmt(w.right) + "]: " + in_.k.format(w.coeff_u) + " vs " + in_.k.format(w.coeff_v) + "\n";
    }

    json letters_json(const std::vector<Letter>& ls) const {
        json out = json::array();
        for (Letter a : ls) out.push_back(alphabet().token(a));
        return out;
    }

    json weight_json(const WeightFn& w) const {
        json out = json::object();
        for (std::size_t a = 0; a < w.size(); ++a) out[alphabet().token(static_cast<Letter>(a))] = w(static_cast<Letter>(a));
        return out;
    }

    std::string weight_text(const WeightFn& w) const {
        std::string out;
        for (std::size_t a = 0; a < w.size(); ++a) {
            if (!out.empty()) out += " ";
            out += alphabet().token(static_cast<Letter>(a)) + ":" + std::to_string(w(static_cast<Letter>(a)));
        }
        return out;
    }

    ThetaGraph theta() const {
        if (!opts_.theta.empty()) {
            params_["theta"] = opts_.theta;
            return ThetaGraph::parse(alphabet(), opts_.theta);
        }
        return ThetaGraph::from_presentation(in_.presentation);
    }

    std::size_t maxlen(std::size_t fallback) const {
        std::size_t n = opts_.maxlen.value_or(fallback);
        params_["maxlen"] = n;
        return n;
    }

    Outcome check() {
        QuotientContext ctx(in_.presentation, in_.context);
        CompatReport r = check_compatibility(ctx, in_.k);
        Outcome o;
        o.verdict["result"] = r.compatible ? "Compatible" : "Incompatible";
        o.text = std::string(r.compatible ? "Compatible" : "Incompatible") + " over " + in_.k.to_string() + "\n";
        if (r.witness) {
            o.verdict["witness"] = witness_json(*r.witness);
            o.text += witness_text(*r.witness);
        }
        return o;
    }

    json partition_json(const PrimitivePartition& part) const {
        json layers = json::array();
        json absorbed = json::array();
        for (const auto& l : part.layers) layers.push_back(relators_json(l));
        for (const auto& s : part.absorbed) absorbed.push_back(relators_json(s));
        return json{{"depth", part.depth()},
                    {"closure_size", part.closure.size()},
                    {"layers", layers},
                    {"absorbed", absorbed},
                    {"leftover", relators_json(part.leftover)}};
    }

    std::string partition_text(const PrimitivePartition& part) const {
        std::string out = "primitive partition of length " + std::to_string(part.depth()) + " (" +
                          std::to_string(part.closure.size()) + " closed pairs)\n";
        for (std::size_t i = 0; i < part.layers.size(); ++i) {
            out += "  R" + std::to_string(i + 1) + ":";
            for (const auto& r : part.layers[i]) out += " " + format_relator(alphabet(), r) + ";";
            out += "\n";
        }
        return out;
    }

    Outcome classify() {
        Classification c = classify_quotient(in_.presentation, in_.k, in_.context);
        Outcome o;
        if (auto* pc = std::get_if<PartiallyCommutative>(&c)) {
            json theta = json::array();
            for (auto [a, b] : pc->theta.pairs()) theta.push_back({alphabet().token(a), alphabet().token(b)});
            json ids = json::array();
            for (const auto& block : pc->identifications) ids.push_back(letters_json(block));
            o.verdict = json{{"result", "PartiallyCommutative"},
                             {"theta", theta},
                             {"identifications", ids},
                             {"erasures", letters_json(pc->erasures)}};
            o.text = "PartiallyCommutative theta={" + format_theta(alphabet(), pc->theta) + "}\n";
            for (const auto& block : pc->identifications) {
                o.text += "  identified:";
                for (Letter a : block) o.text += " " + alphabet().token(a);
                o.text += "\n";
            }
            if (!pc->erasures.empty()) {
                o.text += "  erased:";
                for (Letter a : pc->erasures) o.text += " " + alphabet().token(a);
                o.text += "\n";
            }
        } else if (auto* pd = std::get_if<PrimeDecomposition>(&c)) {
            o.verdict = json{{"result", "PrimeDecomposition"}, {"p", pd->p}, {"partition", partition_json(pd->partition)}};
            o.text = "PrimeDecomposition p=" + std::to_string(pd->p) + ", depth " +
                     std::to_string(pd->partition.depth()) + "\n" + partition_text(pd->partition);
        } else {
            const auto& inc = std::get<IncompatibleQuotient>(c);
            o.verdict = json{{"result", "Incompatible"}};
            o.text = "Incompatible over " + in_.k.to_string() + "\n";
            if (inc.report.witness) {
                o.verdict["witness"] = witness_json(*inc.report.witness);
                o.text += witness_text(*inc.report.witness);
            }
        }
        return o;
    }

    Outcome partition() {
        PartitionConvention conv;
        if (opts_.convention == "cumulative") {
            conv = PartitionConvention::Cumulative;
        } else if (opts_.convention == "as-written") {
            conv = PartitionConvention::AsWritten;
        } else {
            throw UsageError("--convention must be cumulative or as-written");
        }
        params_["convention"] = opts_.convention;
        PrimitivePartition part = primitive_partition(in_.presentation, in_.k, in_.context, conv);
        return Outcome{partition_json(part), partition_text(part)};
    }

    Outcome weight() {
        Outcome o;
        auto w = find_weight(in_.presentation);
        if (w) {
            o.verdict["homogeneous"] = true;
            o.verdict["weight"] = weight_json(*w);
            o.text = "homogeneous for " + weight_text(*w) + "\n";
        } else {
            o.verdict["homogeneous"] = false;
            o.text = "no homogeneous weight\n";
        }
        const SemiringClass cls = classify_semiring(in_.k);
        if (cls.kind == SemiringClass::Kind::RingCharPrime) {
            try {
                PliResult r = pli_consistency(in_.presentation, cls.characteristic);
                if (auto* ok = std::get_if<PliConsistent>(&r)) {
                    json d = json::object();
                    for (const auto& [key, value] : ok->d) {
                        d[alphabet().token(key.first) + "," + alphabet().token(key.second)] = value;
                    }
                    json h = json::object();
                    for (std::size_t a = 0; a < ok->h.size(); ++a) h[alphabet().token(static_cast<Letter>(a))] = ok->h[a];
                    o.verdict["power_relators"] =
                        json{{"result", "Consistent"}, {"d", d}, {"h", h}, {"omega", weight_json(ok->omega)}};
                    o.text += "power relators consistent, omega " + weight_text(ok->omega) + "\n";
                } else {
                    const auto& nc = std::get<NonCancellable>(r);
                    o.verdict["power_relators"] = json{{"result", "NonCancellable"},
                                                       {"relators", relators_json({nc.first, nc.second})}};
                    o.text += "power relators force a non-cancellable quotient: " +
                              format_relator(alphabet(), nc.first) + ", " + format_relator(alphabet(), nc.second) +
                              "\n";
                }
            } catch (const ShapeError&) {
                o.verdict["power_relators"] = json{{"result", "NotApplicable"}};
            }
        }
        return o;
    }

    WeightFn series_weight() const {
        auto w = find_weight(in_.presentation);
        if (!w) throw PreconditionViolated("presentation has no homogeneous weight");
        params_["weight"] = weight_json(*w);
        return *w;
    }

    template <class Arith>
    json series_json(const GradedSeries<Arith>& s) const {
        json out = json::array();
        for (const auto& [g, terms] : format_series(alphabet(), s)) out.push_back(json{{"grade", g}, {"terms", terms}});
        return out;
    }

    template <class Arith>
    std::string series_text(const GradedSeries<Arith>& s) const {
        std::string out;
        for (const auto& [g, terms] : format_series(alphabet(), s)) {
            out += "[" + std::to_string(g) + "] " + terms + "\n";
        }
        return out;
    }

    Word word_option() const {
        if (opts_.word.empty()) throw UsageError("--word is required");
        params_["word"] = opts_.word;
        return alphabet().parse_word(opts_.word);
    }

    Outcome magnus() {
        const Word w = word_option();
        const WeightFn omega = series_weight();
        const std::uint64_t degree = opts_.max_weight.value_or(omega(w));
        params_["max_weight"] = degree;
        auto ctx = std::make_shared<const QuotientContext>(in_.presentation, in_.context);
        TruncSeries s = magnus_transform(ctx, in_.k, omega, w, degree);
        return Outcome{json{{"series", series_json(s)}}, series_text(s)};
    }

    Outcome qroot() {
        const WeightFn omega = series_weight();
        auto ctx = std::make_shared<const QuotientContext>(in_.presentation, in_.context);
        const std::uint64_t q = opts_.q.value_or(2);
        params_["q"] = q;
        std::optional<TruncSeries> s;
        if (!opts_.series.empty()) {
            params_["series"] = opts_.series;
            const Poly p = parse_poly(alphabet(), in_.k, opts_.series);
            std::uint64_t top = 0;
            for (const auto& [w, c] : p.terms()) top = std::max(top, omega(w));
            const std::uint64_t degree = opts_.max_weight.value_or(top);
            s.emplace(ctx, omega, degree, SemiringArith{in_.k});
            for (const auto& [w, c] : p.terms()) s->add_term(w, c);
        } else {
            const Word w = word_option();
            s = magnus_transform(ctx, in_.k, omega, w, opts_.max_weight.value_or(omega(w)));
        }
        params_["max_weight"] = s->degree();
        Outcome o;
        if (in_.k == Semiring::integers()) {
            RationalSeries root = q_root_rational(*s, q);
            bool roundtrip = series_pow(root, q) == to_rational(*s);
            o.verdict = json{{"coefficients", "Q"}, {"root", series_json(root)}, {"roundtrip", roundtrip}};
            o.text = series_text(root);
        } else {
            TruncSeries root = q_root(*s, q);
            bool roundtrip = series_pow(root, q) == *s;
            o.verdict = json{{"coefficients", in_.k.to_string()}, {"root", series_json(root)}, {"roundtrip", roundtrip}};
            o.text = series_text(root);
        }
        return o;
    }

    Outcome lyndon() {
        const ThetaGraph th = theta();
        const std::size_t n = maxlen(4);
        Outcome o;
        json list = json::array();
        for (const auto& t : lyndon_traces(th, n)) {
            const std::string lambda = format_poly(alphabet(), lalonde_lambda(th, t));
            list.push_back(json{{"trace", fmt(t.word())}, {"std", fmt(t.std_word())}, {"lambda", lambda}});
            o.text += fmt(t.word()) + "  " + lambda + "\n";
        }
        o.verdict = json{{"theta", format_theta(alphabet(), th)}, {"traces", list}};
        return o;
    }

    Outcome primitive_binomials() {
        const SemiringClass cls = classify_semiring(in_.k);
        if (cls.kind != SemiringClass::Kind::RingCharPrime) throw NonPrimeCharacteristic(in_.k);
        const ThetaGraph th = theta();
        const std::size_t n = maxlen(4);
        Outcome o;
        json list = json::array();
        for (const auto& [u, v] : classify_primitive_binomials(cls.characteristic, alphabet(), th, n)) {
            list.push_back(json::array({fmt(u), fmt(v)}));
            o.text += fmt(u) + " - " + fmt(v) + "\n";
        }
        o.verdict = json{{"theta", format_theta(alphabet(), th)}, {"pairs", list}};
        return o;
    }

    Outcome cancel_search() {
        const std::size_t bound = maxlen(4);
        QuotientContext ctx(in_.presentation, in_.context);
        auto found = cancellability_search(ctx, bound);
        Outcome o;
        if (found) {
            o.verdict = json{{"result", "NotCancellable"},
                             {"x", fmt(found->x)},
                             {"u", fmt(found->u)},
                             {"v", fmt(found->v)},
                             {"side", found->left ? "left" : "right"}};
            o.text = found->left ? "x u = x v" : "u x = v x";
            o.text += " with x=" + fmt(found->x) + ", u=" + fmt(found->u) + ", v=" + fmt(found->v) + "\n";
        } else {
            o.verdict = json{{"result", "NoWitness"}};
            o.text = "no cancellation failure up to length " + std::to_string(bound) + "\n";
        }
        return o;
    }

    Outcome verify() {
        if (opts_.witness.empty()) throw UsageError("--witness is required");
        std::ifstream in(opts_.witness);
        if (!in) throw UsageError("cannot read " + opts_.witness);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw ParseError(0, std::string("witness file: ") + e.what());
        }
        const json* w = &doc;
        if (doc.contains("verdict") && doc["verdict"].contains("witness")) w = &doc["verdict"]["witness"];
        if (!w->contains("relator")) throw UsageError("witness file has no witness");
        CompatWitness cw;
        try {
            cw.relator = oriented(alphabet().parse_word((*w)["relator"][0].get<std::string>()),
                                  alphabet().parse_word((*w)["relator"][1].get<std::string>()));
            const bool swapped = cw.relator.first != alphabet().parse_word((*w)["relator"][0].get<std::string>());
            cw.left = alphabet().parse_word((*w)["left"].get<std::string>());
            cw.right = alphabet().parse_word((*w)["right"].get<std::string>());
            cw.coeff_u = in_.k.from_integer(BigInt((*w)["coeff_u"].get<std::string>()));
            cw.coeff_v = in_.k.from_integer(BigInt((*w)["coeff_v"].get<std::string>()));
            if (swapped) std::swap(cw.coeff_u, cw.coeff_v);
        } catch (const json::exception& e) {
            throw ParseError(0, std::string("witness file: ") + e.what());
        }
        QuotientContext ctx(in_.presentation, in_.context);
        const bool valid = verify_witness(ctx, in_.k, cw);
        const Value a = split_coefficient(ctx, in_.k, cw.relator.first, cw.left, cw.right);
        const Value b = split_coefficient(ctx, in_.k, cw.relator.second, cw.left, cw.right);
        Outcome o;
        o.verdict = json{{"valid", valid},
                         {"relator", relator_json(cw.relator)},
                         {"recomputed_u", in_.k.format(a)},
                         {"recomputed_v", in_.k.format(b)}};
        o.text = std::string(valid ? "witness confirmed" : "witness rejected") + ": " + in_.k.format(a) + " vs " +
                 in_.k.format(b) + "\n";
        return o;
    }

    const Options& opts_;
    const Input& in_;
    json& params_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Shuffle-compatible congruences on finitely presented monoids", "shufcong"};
    app.add_option("command", opts.command, "Analysis to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("file", opts.file, "Presentation file")->required();
    app.add_flag("--json", opts.json, "Emit a JSON report");
    app.add_option("--cap", opts.cap, "Maximal word length during class exploration");
    app.add_option("--max-class-size", opts.max_class_size, "Give up on a class past this many words");
    app.add_option("--max-weight", opts.max_weight, "Series truncation degree");
    app.add_option("--q", opts.q, "Root order for qroot");
    app.add_option("--maxlen", opts.maxlen, "Length bound for enumerations");
    app.add_option("--theta", opts.theta, "Commutation pairs a:b,a:c");
    app.add_option("--seed", opts.seed, "Seed recorded in the report");
    app.add_option("--word", opts.word, "Word for magnus and qroot");
    app.add_option("--series", opts.series, "Series for qroot, in polynomial syntax");
    app.add_option("--witness", opts.witness, "Report or witness JSON for verify-witness");
    app.add_option("--semiring", opts.semiring, "Overrides the file's semiring: N, B, Z, Z/n");
    app.add_option("--convention", opts.convention, "Partition convention: cumulative or as-written");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kDefinite;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    Input in;
    std::string text;
    try {
        text = read_file(opts.file);
        PresentationFile pf = parse_presentation_file(text);
        in.presentation = std::move(pf.presentation);
        if (!opts.semiring.empty()) {
            in.k = Semiring::parse(opts.semiring);
        } else if (pf.semiring) {
            in.k = *pf.semiring;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (dynamic_cast<const UsageError*>(&e) && !dynamic_cast<const ParseError*>(&e)) err << app.help();
        return kUsage;
    }
    in.context.cap = opts.cap.value_or(default_cap(in.presentation));
    if (opts.max_class_size) in.context.max_class_size = *opts.max_class_size;

    json params = json::object();
    params["semiring"] = in.k.to_string();
    params["cap"] = *in.context.cap;
    params["max_class_size"] = in.context.max_class_size;
    if (opts.seed) params["seed"] = *opts.seed;

    json report = json::object();
    report["schema"] = "shufcong-report/1";
    report["command"] = opts.command;
    report["input_digest"] = digest(text);

    const auto start = std::chrono::steady_clock::now();
    int code = kDefinite;
    Outcome outcome;
    std::string status = "ok";
    try {
        Analysis analysis(opts, in, params);
        outcome = analysis.run();
    } catch (const Inconclusive& e) {
        code = kInconclusive;
        status = "inconclusive";
        outcome.verdict = json{{"result", "Inconclusive"}, {"cap", e.cap()}, {"reason", e.what()}};
        outcome.text = std::string("Inconclusive: ") + e.what() + "\nraise --cap or --max-class-size to go further\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (opts.json) {
        report["status"] = status;
        report["parameters"] = params;
        report["verdict"] = outcome.verdict;
        report["timing"] = json{{"seconds", seconds}};
        out << report.dump(2) << "\n";
    } else {
        out << outcome.text;
    }
    return code;
}

} // namespace shufcong::cli
