#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qres/decomp.hpp"
#include "qres/diffmod.hpp"
#include "qres/error.hpp"
#include "qres/io.hpp"
#include "qres/resolve.hpp"
#include "qres/selfcheck.hpp"

using namespace qres;
using io::Json;

namespace {

enum Exit { Pass = 0, VerdictFalse = 1, InputError = 2, CertificateFailure = 3 };

struct JobSpec {
    std::string command;
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    std::size_t bound = 3;
    std::size_t retries = 64;
    std::string field;
    std::string output;
    std::string format = "json";
};

struct Outcome {
    Json doc;
    std::string summary;
    int code = Pass;
};

std::optional<Field> field_override(const JobSpec& job)
{
    if (job.field.empty())
        return std::nullopt;
    return Field::parse(job.field);
}

Json header(const JobSpec& job, const std::vector<Json>& inputs)
{
    Json digests = Json::array();
    for (const auto& in : inputs)
        digests.push_back(io::digest(in));
    return {{"schema", io::kSchema},
            {"command", job.command},
            {"inputs", digests},
            {"job", {{"seed", job.seed}, {"bound", job.bound}, {"retries", job.retries}}}};
}

// Copies field, algebra and shape so that the document reads back as a setting.
void add_setting(Json& doc, const Setting& s)
{
    doc.update(io::setting_to_json(s));
}

std::string dims_text(const std::vector<std::size_t>& dims)
{
    std::string out = "(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        out += (i ? "," : "") + std::to_string(dims[i]);
    return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json flags_json(const ResolutionFlags& f)
{
    return {{"weak_equivalence", f.weak_equivalence}, {"semiinjective", f.semiinjective}, {"minimal", f.minimal}};
}

// Object-by-object dimension vectors of a diagram.
std::string diagram_dims(const Setting& s, const Diagram& x)
{
    std::string out;
    for (std::size_t q = 0; q < s.object_count(); ++q)
        out += (q ? " " : "") + dims_text(evaluate(s, q, x).dims());
    return out;
}

Outcome cmd_homology(const JobSpec& job)
{
    Json input = io::load(job.inputs[0]);
    auto in = io::read_diagram_document(input, field_override(job));
    const Setting& s = *in.setting;
    Outcome out{header(job, {input}), "", Pass};
    Json groups = Json::array();
    bool exact = true;
    for (std::size_t q = 0; q < s.object_count(); ++q) {
        for (std::size_t i = 1; i <= s.homology_degrees(); ++i) {
            Module h = homology(s, q, i, in.diagram);
            exact = exact && h.is_zero();
            groups.push_back({{"object", q}, {"degree", i}, {"dims", h.dims()}, {"module", io::module_to_json(h)}});
            out.summary += "H^" + std::to_string(i) + " at " + s.shape().objects()[q] + ": " + dims_text(h.dims()) + "\n";
        }
    }
    out.doc["homology"] = groups;
    out.doc["exact"] = exact;
    out.summary += std::string("exact: ") + yes_no(exact) + "\n";
    return out;
}

Outcome cmd_resolve(const JobSpec& job)
{
    Json input = io::load(job.inputs[0]);
    auto in = io::read_diagram_document(input, field_override(job));
    const Setting& s = *in.setting;
    Resolution r = resolve_min(s, in.diagram, {job.seed, job.bound});
    Outcome out{header(job, {input}), "", r.certified.all() ? Pass : CertificateFailure};
    add_setting(out.doc, s);
    out.doc["source"] = io::diagram_to_json(s, r.source);
    out.doc["target"] = io::diagram_to_json(s, r.target);
    out.doc["map"] = io::diagram_map_to_json(s, r.map);
    out.doc["certificates"] = flags_json(r.certified);
    out.summary = "target dims: " + diagram_dims(s, r.target) + "\nweak equivalence: " +
                  yes_no(r.certified.weak_equivalence) + "\nsemiinjective: " + yes_no(r.certified.semiinjective) +
                  "\nminimal: " + yes_no(r.certified.minimal) + "\n";
    return out;
}

Json split_json(const Setting& s, const InjectiveSplit& split)
{
    return {{"minimal", io::diagram_to_json(s, split.minimal)},
            {"injective", io::diagram_to_json(s, split.injective)},
            {"iso", io::diagram_map_to_json(s, split.iso)}};
}

struct SplitChecks {
    bool iso = false;
    bool injective_exact = false;
    bool minimal = false;

    bool all() const { return iso && injective_exact && minimal; }
    Json json() const { return {{"iso", iso}, {"injective_exact", injective_exact}, {"minimal", minimal}}; }
};

SplitChecks check_split(const Setting& s, const Diagram& i, const Diagram& minimal, const Diagram& injective,
                        const DiagramMap& iso, std::uint64_t seed)
{
    SplitChecks c;
    Diagram sum = direct_sum(s.lambda(), {minimal, injective}).sum;
    c.iso = iso.source() == i && iso.target() == sum && iso.is_iso();
    c.injective_exact = is_exact(s, injective) && is_injective_object(s, injective);
    c.minimal = is_semiinjective(s, minimal) && is_minimal_semiinjective(s, minimal, seed);
    return c;
}

Outcome cmd_split(const JobSpec& job)
{
    Json input = io::load(job.inputs[0]);
    auto in = io::read_diagram_document(input, field_override(job));
    const Setting& s = *in.setting;
    auto split = split_injective_part(s, in.diagram, job.seed);
    SplitChecks c = check_split(s, in.diagram, split.minimal, split.injective, split.iso, job.seed + 1);
    Outcome out{header(job, {input}), "", c.all() ? Pass : CertificateFailure};
    add_setting(out.doc, s);
    out.doc["diagram"] = io::diagram_to_json(s, in.diagram);
    out.doc.update(split_json(s, split));
    out.doc["certificates"] = c.json();
    out.summary = "minimal part dims: " + diagram_dims(s, split.minimal) +
                  "\ninjective part dims: " + diagram_dims(s, split.injective) + "\n";
    return out;
}

Outcome cmd_check_minimal(const JobSpec& job)
{
    Json input = io::load(job.inputs[0]);
    auto in = io::read_diagram_document(input, field_override(job));
    const Setting& s = *in.setting;
    Outcome out{header(job, {input}), "", Pass};
    add_setting(out.doc, s);
    out.doc["diagram"] = io::diagram_to_json(s, in.diagram);
    Json certs;
    const bool semi = is_semiinjective(s, in.diagram);
    certs["semiinjective"] = semi;
    bool verdict = semi;
    if (semi) {
        auto split = split_injective_part(s, in.diagram, job.seed);
        const bool minimal = split.injective.is_zero();
        certs["no_exact_summand"] = minimal;
        if (s.shape().is_loop())
            certs["socle_criterion"] = loop_socle_criterion(s, in.diagram);
        if (!minimal)
            out.doc["split"] = split_json(s, split);
        verdict = minimal;
    }
    out.doc["certificates"] = certs;
    out.doc["verdict"] = verdict;
    out.code = verdict ? Pass : VerdictFalse;
    out.summary = std::string("minimal semiinjective: ") + yes_no(verdict) + "\nsemiinjective: " + yes_no(semi) + "\n";
    return out;
}

// Both documents must describe objects in the same setting.
struct Pair {
    std::vector<Json> inputs;
    std::optional<io::DiagramInput> x, y;
    std::optional<io::ModuleInput> m, n;
};

Pair read_pair(const JobSpec& job, bool allow_modules)
{
    Pair p;
    p.inputs = {io::load(job.inputs[0]), io::load(job.inputs[1])};
    const bool modules = p.inputs[0].contains("module") && !p.inputs[0].contains("diagram");
    if (modules) {
        if (!allow_modules)
            fail(ErrorKind::ParseError, job.inputs[0] + ": expected a diagram document");
        p.m = io::read_module_document(p.inputs[0], field_override(job));
        p.n = io::read_module_document(p.inputs[1], field_override(job));
        if (!p.m->algebra->same_as(*p.n->algebra))
            fail(ErrorKind::ShapeMismatch, "the two modules are over different algebras");
    } else {
        p.x = io::read_diagram_document(p.inputs[0], field_override(job));
        p.y = io::read_diagram_document(p.inputs[1], field_override(job));
        if (io::setting_to_json(*p.x->setting) != io::setting_to_json(*p.y->setting))
            fail(ErrorKind::ShapeMismatch, "the two diagrams live in different settings");
        // Both diagrams are read against the first setting.
        p.y->diagram = io::diagram_from_json(*p.x->setting, p.inputs[1]["diagram"], "/diagram");
    }
    return p;
}

std::string verdict_name(IsoVerdict v)
{
    switch (v) {
    case IsoVerdict::Isomorphic:
        return "isomorphic";
    case IsoVerdict::NotIsomorphic:
        return "not-isomorphic";
    default:
        return "unknown";
    }
}

Outcome cmd_iso(const JobSpec& job)
{
    Pair p = read_pair(job, true);
    Outcome out{header(job, p.inputs), "", Pass};
    IsoResult r;
    if (p.m) {
        r = is_isomorphic(p.m->module, p.n->module, job.seed, job.retries);
        out.doc["field"] = io::field_to_json(p.m->module.field());
        out.doc["algebra"] = io::algebra_to_json(*p.m->algebra);
        out.doc["source"] = io::module_to_json(p.m->module);
        out.doc["target"] = io::module_to_json(p.n->module);
        if (r.iso)
            out.doc["witness"] = io::map_to_json(*r.iso);
    } else {
        const Setting& s = *p.x->setting;
        r = is_isomorphic(p.x->diagram, p.y->diagram, job.seed, job.retries);
        add_setting(out.doc, s);
        out.doc["source"] = io::diagram_to_json(s, p.x->diagram);
        out.doc["target"] = io::diagram_to_json(s, p.y->diagram);
        if (r.iso)
            out.doc["witness"] = io::diagram_map_to_json(s, *r.iso);
    }
    out.doc["verdict"] = verdict_name(r.verdict);
    out.doc["reason"] = r.reason;
    out.code = r.verdict == IsoVerdict::Isomorphic ? Pass : VerdictFalse;
    out.summary = "verdict: " + verdict_name(r.verdict) + (r.reason.empty() ? "" : " (" + r.reason + ")") + "\n";
    return out;
}

Outcome cmd_hom_derived(const JobSpec& job)
{
    Pair p = read_pair(job, false);
    const Setting& s = *p.x->setting;
    auto h = hom_in_derived(s, p.x->diagram, p.y->diagram, job.seed);
    Outcome out{header(job, p.inputs), "", h.resolution.certified.all() ? Pass : CertificateFailure};
    add_setting(out.doc, s);
    out.doc["source"] = io::diagram_to_json(s, p.x->diagram);
    out.doc["target"] = io::diagram_to_json(s, p.y->diagram);
    out.doc["dimension"] = h.dimension;
    out.doc["resolution"] = {{"target", io::diagram_to_json(s, h.resolution.target)},
                             {"map", io::diagram_map_to_json(s, h.resolution.map)},
                             {"certificates", flags_json(h.resolution.certified)}};
    Json reps = Json::array();
    for (const auto& f : h.representatives)
        reps.push_back(io::diagram_map_to_json(s, f));
    out.doc["representatives"] = reps;
    out.summary = "dimension: " + std::to_string(h.dimension) + "\n";
    return out;
}

Json diff_certificates_json(const DiffCertificates& c)
{
    return {{"morphism", c.morphism},
            {"quasi_isomorphism", c.quasi_isomorphism},
            {"injective", c.injective},
            {"socle_in_cycles", c.socle_in_cycles},
            {"no_exact_summand", c.no_exact_summand}};
}

Outcome cmd_rz(const JobSpec& job, const std::string& direction)
{
    Json input = io::load(job.inputs[0]);
    if (direction == "h") {
        auto in = io::read_diagram_document(input, field_override(job));
        if (!in.setting->shape().is_loop())
            fail(ErrorKind::ShapeMismatch, "rz h takes a differential module (loop shape)");
        Module h = rz_H(from_diagram(*in.setting, in.diagram), job.seed);
        Outcome out{header(job, {input}), "", Pass};
        out.doc.update(io::module_document(h));
        out.summary = "homology dims: " + dims_text(h.dims()) + "\n";
        return out;
    }
    if (direction != "k")
        fail(ErrorKind::ParseError, "direction must be h or k");
    auto in = io::read_module_document(input, field_override(job));
    // K(M) is the target of the minimal resolution of (M, 0).
    auto r = resolve_min_diff(DifferentialModule::trivial(in.module), job.seed);
    SettingPtr s = loop_setting(in.algebra);
    Outcome out{header(job, {input}), "", r.certificates.all() ? Pass : CertificateFailure};
    add_setting(out.doc, *s);
    out.doc["diagram"] = io::diagram_to_json(*s, to_diagram(*s, r.target));
    out.doc["source"] = io::diagram_to_json(*s, to_diagram(*s, r.source));
    out.doc["map"] = io::map_to_json(r.map);
    out.doc["certificates"] = diff_certificates_json(r.certificates);
    out.summary = "dims: " + dims_text(r.target.underlying().dims()) + "\n";
    return out;
}

Outcome cmd_selftest(const JobSpec& job, const std::string& scale_name)
{
    const auto scale = selfcheck::parse_scale(scale_name);
    Outcome out{header(job, {}), "", Pass};
    out.doc["scale"] = scale_name;
    Json suites = Json::array();
    bool passed = true;
    auto run = [&](const selfcheck::Suite& suite) {
        auto r = suite.run(scale, job.seed + suite.id);
        passed = passed && r.passed();
        suites.push_back({{"id", r.id},
                          {"name", r.name},
                          {"instances", r.instances},
                          {"failures", r.failures},
                          {"note", r.note},
                          {"passed", r.passed()}});
        out.summary += std::string(r.passed() ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name + " [" +
                       std::to_string(r.instances) + " instances, " + std::to_string(r.failures) + " failures] " +
                       r.note + "\n";
    };
    for (const auto& suite : selfcheck::acceptance_suites())
        run(suite);
    for (const auto& suite : selfcheck::extra_suites())
        run(suite);
    out.doc["suites"] = suites;
    out.doc["passed"] = passed;
    out.code = passed ? Pass : VerdictFalse;
    return out;
}

// Re-reads an output document and re-checks every embedded certificate.
Outcome cmd_verify(const JobSpec& job)
{
    Json doc = io::load(job.inputs[0]);
    Outcome out{header(job, {doc}), "", Pass};
    if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_string())
        fail(ErrorKind::ParseError, job.inputs[0] + ": not an output document");
    const std::string command = doc["command"].get<std::string>();
    Json checks = Json::object();
    auto expect_all = [&](const Json& embedded, const Json& recomputed) {
        checks = recomputed;
        for (auto& [key, value] : recomputed.items())
            if (!value.get<bool>() || !embedded.contains(key) || embedded[key] != value)
                out.code = CertificateFailure;
    };
    if (command == "resolve") {
        SettingPtr s = io::setting_from_json(doc);
        Diagram x = io::diagram_from_json(*s, doc["source"], "/source");
        Diagram i = io::diagram_from_json(*s, doc["target"], "/target");
        DiagramMap f = io::diagram_map_from_json(*s, x, i, doc["map"], "/map");
        expect_all(doc["certificates"], flags_json(certify_resolution(*s, {x, i, f, {}}, job.seed)));
    } else if (command == "split") {
        SettingPtr s = io::setting_from_json(doc);
        Diagram i = io::diagram_from_json(*s, doc["diagram"], "/diagram");
        Diagram minimal = io::diagram_from_json(*s, doc["minimal"], "/minimal");
        Diagram injective = io::diagram_from_json(*s, doc["injective"], "/injective");
        Diagram sum = direct_sum(s->lambda(), {minimal, injective}).sum;
        DiagramMap iso = io::diagram_map_from_json(*s, i, sum, doc["iso"], "/iso");
        expect_all(doc["certificates"], check_split(*s, i, minimal, injective, iso, job.seed).json());
    } else if (command == "check-minimal") {
        SettingPtr s = io::setting_from_json(doc);
        Diagram i = io::diagram_from_json(*s, doc["diagram"], "/diagram");
        const bool semi = is_semiinjective(*s, i);
        const bool verdict = semi && is_minimal_semiinjective(*s, i, job.seed);
        checks = {{"verdict", verdict}};
        if (doc["verdict"] != verdict)
            out.code = CertificateFailure;
        if (doc.contains("split")) {
            Diagram minimal = io::diagram_from_json(*s, doc["split"]["minimal"], "/split/minimal");
            Diagram injective = io::diagram_from_json(*s, doc["split"]["injective"], "/split/injective");
            Diagram sum = direct_sum(s->lambda(), {minimal, injective}).sum;
            DiagramMap iso = io::diagram_map_from_json(*s, i, sum, doc["split"]["iso"], "/split/iso");
            SplitChecks c = check_split(*s, i, minimal, injective, iso, job.seed);
            checks["split"] = c.json();
            if (!c.all() || injective.is_zero())
                out.code = CertificateFailure;
        }
    } else if (command == "iso") {
        const std::string verdict = doc["verdict"].get<std::string>();
        bool ok = true;
        if (verdict == "isomorphic") {
            if (doc.contains("shape")) {
                SettingPtr s = io::setting_from_json(doc);
                Diagram x = io::diagram_from_json(*s, doc["source"], "/source");
                Diagram y = io::diagram_from_json(*s, doc["target"], "/target");
                ok = io::diagram_map_from_json(*s, x, y, doc["witness"], "/witness").is_iso();
            } else {
                AlgebraPtr a = io::algebra_from_json(io::field_from_json(doc["field"]), doc["algebra"], "/algebra");
                Module m = io::module_from_json(a, doc["source"], "/source");
                Module n = io::module_from_json(a, doc["target"], "/target");
                ok = io::map_from_json(m, n, doc["witness"], "/witness").is_iso();
            }
        }
        checks = {{"witness", ok}};
        if (!ok)
            out.code = CertificateFailure;
    } else if (command == "hom-derived") {
        SettingPtr s = io::setting_from_json(doc);
        Diagram x = io::diagram_from_json(*s, doc["source"], "/source");
        Diagram y = io::diagram_from_json(*s, doc["target"], "/target");
        Diagram i = io::diagram_from_json(*s, doc["resolution"]["target"], "/resolution/target");
        DiagramMap f = io::diagram_map_from_json(*s, y, i, doc["resolution"]["map"], "/resolution/map");
        auto flags = certify_resolution(*s, {y, i, f, {}}, job.seed);
        auto h = hom_mod_injectives(*s, x, i);
        // Representatives must be independent modulo maps through injectives.
        std::size_t len = 0;
        for (std::size_t v = 0; v < x.dims().size(); ++v)
            len += x.dim(v) * i.dim(v);
        Matrix span(s->field(), len, 0);
        for (const auto& n : h.null_maps)
            span = Matrix::hstack(span, n.flatten());
        const std::size_t null_rank = span.rank();
        const Json& reps = doc["representatives"];
        for (std::size_t k = 0; k < reps.size(); ++k)
            span = Matrix::hstack(
                span, io::diagram_map_from_json(*s, x, i, reps[k], "/representatives/" + std::to_string(k)).flatten());
        const bool basis = reps.size() == h.dimension && span.rank() == null_rank + h.dimension &&
                           doc["dimension"] == h.dimension;
        checks = {{"resolution", flags.all()}, {"representatives", basis}};
        if (!flags.all() || !basis)
            out.code = CertificateFailure;
    } else if (command == "rz-k") {
        SettingPtr s = io::setting_from_json(doc);
        DifferentialModule x = from_diagram(*s, io::diagram_from_json(*s, doc["source"], "/source"));
        DifferentialModule j = from_diagram(*s, io::diagram_from_json(*s, doc["diagram"], "/diagram"));
        ModuleMap f = io::map_from_json(x.underlying(), j.underlying(), doc["map"], "/map");
        expect_all(doc["certificates"], diff_certificates_json(certify_diff_resolution(x, j, f, job.seed)));
    } else if (command == "rz-h" || command == "homology") {
        // Nothing is embedded beyond the result itself; check it parses.
        if (command == "rz-h")
            io::read_module_document(doc);
        checks = {{"parsed", true}};
    } else {
        fail(ErrorKind::ParseError, job.inputs[0] + ": unknown command '" + command + "'");
    }
    out.doc["verified"] = command;
    out.doc["checks"] = checks;
    out.doc["valid"] = out.code == Pass;
    out.summary = std::string("valid: ") + yes_no(out.code == Pass) + "\n";
    return out;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CertificationFailure:
    case ErrorKind::Internal:
        return CertificateFailure;
    case ErrorKind::NoSolution:
    case ErrorKind::NoRetraction:
    case ErrorKind::SequenceDoesNotSplit:
    case ErrorKind::ResolutionNotFound:
        return VerdictFalse;
    default:
        return InputError;
    }
}

void emit(const JobSpec& job, const Outcome& out)
{
    const std::string text = job.format == "summary" ? out.summary : out.doc.dump(2) + "\n";
    if (job.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(job.output);
    if (!file)
        fail(ErrorKind::ParseError, job.output + ": cannot write");
    file << text;
}

// Digest of the first readable input, for error messages.
std::string input_digest(const JobSpec& job)
{
    for (const auto& path : job.inputs) {
        try {
            return io::digest(io::load(path));
        } catch (const Error&) {
        }
    }
    return {};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal semiinjective resolutions of diagrams over path algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    JobSpec job;
    app.add_option("--seed", job.seed, "Seed for all randomized steps")->capture_default_str();
    app.add_option("--bound", job.bound, "Cosyzygy steps tried by resolve on general shapes")->capture_default_str();
    app.add_option("--retries", job.retries, "Random attempts before isomorphism tests fall back")
        ->capture_default_str();
    app.add_option("--field", job.field, "Override the field of every input (a prime or Q)");
    app.add_option("--output", job.output, "Write the result here instead of stdout");
    app.add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "summary"}))
        ->capture_default_str();

    std::string direction, scale;
    auto one = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", job.inputs, "Input document")->required()->expected(1);
        return sub;
    };
    auto two = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("inputs", job.inputs, "Two input documents")->required()->expected(2);
        return sub;
    };
    one("homology", "Homology modules of a diagram");
    one("resolve", "Minimal semiinjective resolution");
    one("split", "Split a semiinjective diagram into minimal and injective parts");
    one("check-minimal", "Decide minimal semiinjectivity");
    two("iso", "Isomorphism test with witness");
    two("hom-derived", "Hom in the derived category");
    auto* rz = app.add_subcommand("rz", "Homology (h) or minimal resolution of a stalk (k)");
    rz->add_option("direction", direction, "h or k")->required()->check(CLI::IsMember({"h", "k"}));
    rz->add_option("input", job.inputs, "Input document")->required()->expected(1);
    auto* selftest = app.add_subcommand("selftest", "Run the property suites");
    selftest->add_option("scale", scale, "tiny, small or full")->required()->check(
        CLI::IsMember({"tiny", "small", "full"}));
    one("verify", "Re-check the certificates embedded in an output document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Pass : InputError;
    }
    job.command = app.get_subcommands().front()->get_name();

    try {
        Outcome out;
        if (job.command == "homology")
            out = cmd_homology(job);
        else if (job.command == "resolve")
            out = cmd_resolve(job);
        else if (job.command == "split")
            out = cmd_split(job);
        else if (job.command == "check-minimal")
            out = cmd_check_minimal(job);
        else if (job.command == "iso")
            out = cmd_iso(job);
        else if (job.command == "hom-derived")
            out = cmd_hom_derived(job);
        else if (job.command == "rz") {
            job.command = "rz-" + direction;
            out = cmd_rz(job, direction);
        } else if (job.command == "selftest")
            out = cmd_selftest(job, scale);
        else
            out = cmd_verify(job);
        emit(job, out);
        return out.code;
    } catch (const Error& e) {
        std::string digest = e.digest().empty() ? input_digest(job) : e.digest();
        std::cerr << "error: " << e.what();
        if (!digest.empty())
            std::cerr << " [digest " << digest << "]";
        std::cerr << "\n";
        return exit_code_for(e.kind());
    } catch (const Json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return InputError;
    }
}
