// Batch front-end: reads JSON job files, dispatches to the library, and
// writes one deterministic JSON report per job, named by job content
// hash. Exit code 0 when every expectation is confirmed, 2 when any
// expectation is refuted, 1 on errors.

#include "specgeo/constructions.hpp"
#include "specgeo/json_io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace specgeo;

namespace {

struct Caps {
    size_t closure = kDefaultClosureCap;
    size_t classes = kDefaultClassCap;
};

GroupPtr symmetric_group(unsigned n) {
    std::vector<int> cycle(n), swap01(n);
    for (unsigned i = 0; i < n; ++i) {
        cycle[i] = static_cast<int>((i + 1) % n);
        swap01[i] = static_cast<int>(i);
    }
    std::swap(swap01[0], swap01[1]);
    return permutation_group(n, {swap01, cycle});
}

GroupPtr build_group(const Json& spec, const Caps& caps) {
    const std::string kind = spec.at("construction").get<std::string>();
    if (kind == "heisenberg")
        return heisenberg_group(spec.at("p").get<uint64_t>(), spec.at("n").get<unsigned>(),
                                caps.closure);
    if (kind == "affine")
        return affine_group(spec.at("p").get<uint64_t>(), spec.at("n").get<unsigned>(),
                            caps.closure);
    if (kind == "cyclic") return cyclic_group(spec.at("m").get<uint64_t>());
    if (kind == "symmetric") return symmetric_group(spec.at("n").get<unsigned>());
    throw std::invalid_argument("unknown group construction: " + kind);
}

Subgroup build_subgroup(const GroupPtr& g, const Json& spec) {
    if (spec.contains("generators"))
        return subgroup_from(g, spec["generators"].get<std::vector<int>>());
    if (spec.contains("generator_perms")) {
        std::vector<int> seeds;
        for (const auto& p : spec["generator_perms"]) {
            Encoding e;
            for (int v : p.get<std::vector<int>>()) e.push_back(static_cast<char>(v));
            int idx = g->index_of(e);
            if (idx < 0) throw std::invalid_argument("subgroup: permutation not in group");
            seeds.push_back(idx);
        }
        return subgroup_from(g, seeds);
    }
    if (spec.contains("subspace"))
        return subspace_subgroup(
            g, spec["subspace"].get<std::vector<std::vector<uint64_t>>>());
    if (spec.contains("twist")) {
        TwistMap t{spec["twist"].get<std::vector<std::vector<uint64_t>>>()};
        return twisted_horizontal(g, t);
    }
    if (spec.contains("horizontal") && spec["horizontal"].get<bool>())
        return horizontal_subgroup(g);
    if (spec.contains("full") && spec["full"].get<bool>()) return full_subgroup(g);
    throw std::invalid_argument("subgroup spec needs generators, generator_perms, subspace, "
                                "twist, horizontal, or full");
}

NumberFieldPtr build_field(const Json& spec) {
    std::vector<Integer> c;
    for (const auto& v : spec.at("minpoly")) {
        if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else
            c.emplace_back(v.get<long>());
    }
    return make_number_field(IntegerPolynomial(std::move(c)));
}

NumberFieldElement build_element(const NumberFieldPtr& k, const Json& spec) {
    std::vector<Rational> coords;
    for (const auto& v : spec) {
        if (v.is_string())
            coords.push_back(rational_from_string(v.get<std::string>()));
        else
            coords.push_back(Rational(v.get<long>()));
    }
    return NumberFieldElement(k, std::move(coords));
}

Space parse_space(const std::string& s) {
    if (s == "R") return Space::R;
    if (s == "C") return Space::C;
    if (s == "H") return Space::H;
    throw std::invalid_argument("unknown space: " + s);
}

// true when every stated expectation matches; absent expectations confirm
bool check_expect(const Json& job, const std::string& key, bool actual, Json& result) {
    if (!job.contains("expect") || !job["expect"].contains(key)) return true;
    bool want = job["expect"][key].get<bool>();
    result["expect"][key] = want;
    return want == actual;
}

Json run_group(const Json& job, const Caps& caps) {
    auto g = build_group(job.at("group"), caps);
    Json r;
    r["group"] = group_to_json(g);
    if (job.contains("subgroup")) r["subgroup"] = subgroup_to_json(build_subgroup(g, job["subgroup"]));
    return r;
}

Json run_certify(const Json& job, const Caps& caps, bool& refuted) {
    auto g = build_group(job.at("group"), caps);
    auto h = build_subgroup(g, job.at("h"));
    Json r;
    r["group_hash"] = hash_hex(g->content_hash());
    Json certs = Json::array();
    for (const auto& rel : job.at("relations")) {
        const std::string name = rel.get<std::string>();
        Certificate c;
        if (name == "primitive") {
            c = certify_primitive(g, h);
        } else {
            auto k = build_subgroup(g, job.at("k"));
            if (name == "almost_conjugate")
                c = certify_almost_conjugate(g, h, k);
            else if (name == "elementwise_conjugate")
                c = certify_elementwise_conjugate(g, h, k);
            else if (name == "fixed_point_equivalent")
                c = certify_fixed_point_equivalent(g, h, k);
            else
                throw std::invalid_argument("unknown relation: " + name);
        }
        if (recheck_certificate(c) != c.verdict)
            throw std::logic_error("certificate failed evidence recheck");
        if (!check_expect(job, name, c.verdict, r)) refuted = true;
        certs.push_back(certificate_to_json(c));
    }
    r["certificates"] = std::move(certs);
    return r;
}

Json run_heisenberg_suite(const Json& job, const Caps& caps, bool& refuted) {
    const uint64_t p = job.at("p").get<uint64_t>();
    const unsigned n = job.at("n").get<unsigned>();
    auto g = heisenberg_group(p, n, caps.closure);
    auto reps = twist_representatives(p, n);
    auto classes = conjugacy_classes(g);
    std::vector<Subgroup> subs;
    for (const auto& t : reps) subs.push_back(twisted_horizontal(g, t));

    uint64_t expected = 1;
    for (unsigned i = 0; i < n * (n - 1); ++i) expected *= p;

    bool all_ac = true, conj_iff_mult = true;
    auto f = make_finite_field(p, n);
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j) {
            if (!certify_almost_conjugate(g, classes, subs[i], subs[j]).verdict) all_ac = false;
            bool conj = are_subgroups_conjugate(g, subs[i], subs[j]).conjugate;
            // difference of representatives from distinct cosets is never
            // a multiplication operator, so representatives must be
            // pairwise nonconjugate
            std::vector<std::vector<uint64_t>> diff = reps[i].matrix;
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = 0; b < n; ++b)
                    diff[a][b] = (diff[a][b] + p - reps[j].matrix[a][b] % p) % p;
            bool mult = is_multiplication_operator(f, TwistMap{diff});
            if (conj != mult) conj_iff_mult = false;
        }

    Json r;
    r["group_order"] = g->order();
    r["class_count"] = subs.size();
    r["expected_class_count"] = expected;
    r["all_pairs_almost_conjugate"] = all_ac;
    r["conjugate_iff_multiplication_twist"] = conj_iff_mult;
    bool ok = all_ac && conj_iff_mult && subs.size() == expected;
    r["confirmed"] = ok;
    if (!ok) refuted = true;
    return r;
}

Json run_affine_suite(const Json& job, const Caps& caps, bool& refuted) {
    const uint64_t p = job.at("p").get<uint64_t>();
    const unsigned n = job.at("n").get<unsigned>();
    auto g = affine_group(p, n, caps.closure);
    auto table = character_table(g);
    Json pairs = Json::array();
    bool ok = true;
    for (const auto& pr : job.at("pairs")) {
        auto v = subspace_subgroup(g, pr.at("v").get<std::vector<std::vector<uint64_t>>>());
        auto w = subspace_subgroup(g, pr.at("w").get<std::vector<std::vector<uint64_t>>>());
        auto ec = certify_elementwise_conjugate(g, table.classes, v, w);
        auto fpe = certify_fixed_point_equivalent(table, v, w);
        auto ac = certify_almost_conjugate(g, table.classes, v, w);
        auto pv = certify_primitive(g, v);
        auto pw = certify_primitive(g, w);
        Json e;
        e["elementwise_conjugate"] = certificate_to_json(ec);
        e["fixed_point_equivalent"] = certificate_to_json(fpe);
        e["almost_conjugate"] = certificate_to_json(ac);
        e["primitive_v"] = certificate_to_json(pv);
        e["primitive_w"] = certificate_to_json(pw);
        bool pair_ok = ec.verdict && fpe.verdict && pv.verdict && pw.verdict;
        if (v.order() != w.order() && ac.verdict) pair_ok = false;  // AC forces equal orders
        e["confirmed"] = pair_ok;
        ok = ok && pair_ok;
        pairs.push_back(std::move(e));
    }
    Json r;
    r["group_order"] = g->order();
    r["pairs"] = std::move(pairs);
    r["confirmed"] = ok;
    if (!ok) refuted = true;
    return r;
}

Json run_covers(const Json& job, const Caps& caps, bool& refuted) {
    auto g = build_group(job.at("group"), caps);
    auto h = build_subgroup(g, job.at("h"));
    const unsigned L = job.at("L").get<unsigned>();
    const std::string mode_s = job.value("mode", std::string("multiset_all"));
    SpectrumMode mode;
    bool primitive;
    if (mode_s == "multiset_all") mode = SpectrumMode::multiset_all, primitive = false;
    else if (mode_s == "set_all") mode = SpectrumMode::set_all, primitive = false;
    else if (mode_s == "multiset_primitive") mode = SpectrumMode::multiset_primitive, primitive = true;
    else if (mode_s == "set_primitive") mode = SpectrumMode::set_primitive, primitive = true;
    else throw std::invalid_argument("unknown spectrum mode: " + mode_s);

    Homomorphism phi = [&] {
        bool require = job.value("require_generating", true);
        if (job.contains("a"))
            return make_homomorphism(g, job["a"].get<int>(), job["b"].get<int>(), require);
        auto pair = find_generating_pair(g);
        if (!pair) throw std::invalid_argument("covers: group is not 2-generated; pass images");
        return make_homomorphism(g, pair->first, pair->second, require);
    }();

    auto sh = cover_trace_spectrum(g, h, phi, L, primitive, caps.classes);
    Json r;
    r["images"] = {phi.image_a, phi.image_b};
    r["degree_h"] = coset_table(g, h).index();
    r["spectrum_h"] = spectrum_to_json(sh);
    if (job.contains("k")) {
        auto k = build_subgroup(g, job["k"]);
        auto sk = cover_trace_spectrum(g, k, phi, L, primitive, caps.classes);
        r["degree_k"] = coset_table(g, k).index();
        r["spectrum_k"] = spectrum_to_json(sk);
        auto cmp = compare_spectra(sh, sk, mode);
        r["equal"] = cmp.equal;
        r["compared_below"] = to_string(cmp.compared_below);
        if (!cmp.equal && cmp.first_divergence)
            r["first_divergence"] = to_string(*cmp.first_divergence);
        if (!check_expect(job, "equal", cmp.equal, r)) refuted = true;
    }
    return r;
}

Json run_schreier(const Json& job, const Caps& caps, bool& refuted) {
    auto g = build_group(job.at("group"), caps);
    auto h = build_subgroup(g, job.at("h"));
    auto k = build_subgroup(g, job.at("k"));
    std::vector<int> gens;
    if (job.contains("gens")) {
        gens = job["gens"].get<std::vector<int>>();
    } else {
        auto pair = find_generating_pair(g);
        if (!pair) throw std::invalid_argument("schreier: group is not 2-generated; pass gens");
        gens = {pair->first, g->inv(pair->first), pair->second, g->inv(pair->second)};
    }
    const std::string mode_s = job.value("mode", std::string("multiset"));
    SchreierMode mode = mode_s == "set" ? SchreierMode::set : SchreierMode::multiset;
    auto cmp = schreier_spectrum_compare(g, h, k, gens, mode);
    Json r;
    r["gens"] = gens;
    r["mode"] = mode_s;
    r["degree_h"] = cmp.poly_h.degree();
    r["degree_k"] = cmp.poly_k.degree();
    r["poly_h"] = poly_to_json(cmp.poly_h);
    r["poly_k"] = poly_to_json(cmp.poly_k);
    r["equal"] = cmp.equal;
    if (!check_expect(job, "equal", cmp.equal, r)) refuted = true;
    return r;
}

Json run_forms(const Json& job, bool& refuted) {
    auto field = build_field(job.at("field"));
    const std::string action = job.at("action").get<std::string>();
    Json r;
    if (action == "search_admissible") {
        auto b = search_admissible_diagonal(field, job.at("n").get<unsigned>(),
                                            job.at("height").get<long>());
        r["found"] = b.has_value();
        if (b) {
            Json entries = Json::array();
            for (const auto& e : b->entries) {
                Json coords = Json::array();
                for (const auto& c : e.coords()) coords.push_back(to_string(c));
                entries.push_back(std::move(coords));
            }
            r["entries"] = std::move(entries);
            r["distinguished"] = b->distinguished;
            r["admissible"] = is_admissible(*b).admissible;
        }
        if (!check_expect(job, "found", b.has_value(), r)) refuted = true;
        return r;
    }
    if (action == "admissible") {
        std::vector<NumberFieldElement> entries;
        for (const auto& e : job.at("entries")) entries.push_back(build_element(field, e));
        auto b = make_model_form(field, std::move(entries), job.value("distinguished", 0));
        auto rep = is_admissible(b);
        r["admissible"] = rep.admissible;
        Json sigs = Json::array();
        for (auto [p, q] : rep.signatures) sigs.push_back({p, q});
        r["signatures"] = std::move(sigs);
        if (!check_expect(job, "admissible", rep.admissible, r)) refuted = true;
        return r;
    }
    if (action == "classify") {
        std::vector<NumberFieldElement> entries;
        for (const auto& e : job.at("entries")) entries.push_back(build_element(field, e));
        auto b = make_model_form(field, std::move(entries), job.value("distinguished", 0));
        auto v = classify_cocompactness(parse_space(job.at("X").get<std::string>()), b,
                                        job.value("height", 10'000L));
        r = cocompactness_to_json(v);
        if (job.contains("expect") && job["expect"].contains("verdict")) {
            bool match = r["verdict"] == job["expect"]["verdict"];
            r["expect"]["verdict"] = job["expect"]["verdict"];
            if (!match) refuted = true;
        }
        return r;
    }
    if (action == "quaternion") {
        QuaternionAlgebraDescriptor a{field, build_element(field, job.at("alpha")),
                                      build_element(field, job.at("beta"))};
        auto rep = quaternion_totally_definite(a);
        r["totally_definite"] = rep.totally_definite;
        r["signs"] = rep.signs;
        if (!check_expect(job, "totally_definite", rep.totally_definite, r)) refuted = true;
        return r;
    }
    throw std::invalid_argument("unknown forms action: " + action);
}

Json run_distance(const Json& job) {
    Space space = parse_space(job.at("X").get<std::string>());
    auto parse_point = [&](const Json& coords) {
        std::vector<Quaternion> q;
        for (const auto& c : coords) {
            std::vector<double> v = c.get<std::vector<double>>();
            v.resize(4, 0.0);
            q.push_back({v[0], v[1], v[2], v[3]});
        }
        return make_projective_point(space, std::move(q));
    };
    auto x = parse_point(job.at("x"));
    auto y = parse_point(job.at("y"));
    Json r;
    r["distance"] = hyperbolic_distance(x, y, space);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral equivalence workbench"};
    std::vector<std::string> job_files;
    std::string out_dir = ".";
    uint64_t seed = 0;
    unsigned threads = 1;
    std::string caps_file;
    app.add_option("--job", job_files, "job file (repeatable)")->required();
    app.add_option("--out", out_dir, "report directory");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--threads", threads, "worker threads (jobs run in input order)");
    app.add_option("--caps", caps_file, "caps file");
    CLI11_PARSE(app, argc, argv);

    Caps caps;
    if (!caps_file.empty()) {
        std::ifstream in(caps_file);
        if (!in) {
            std::cerr << "error: cannot read caps file " << caps_file << "\n";
            return 1;
        }
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) {
            std::cerr << "error: caps file is not valid JSON\n";
            return 1;
        }
        caps.closure = j.value("closure", caps.closure);
        caps.classes = j.value("classes", caps.classes);
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    bool any_error = false, any_refuted = false;
    for (const auto& file : job_files) {
        Json report;
        std::string status = "confirmed";
        Json job;
        {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot read job file " << file << "\n";
                any_error = true;
                continue;
            }
            job = Json::parse(in, nullptr, false);
            if (job.is_discarded()) {
                std::cerr << "error: " << file << " is not valid JSON\n";
                any_error = true;
                continue;
            }
        }
        report["job"] = job;
        report["seed"] = seed;
        report["tool_version"] = "0.1.0";
        bool refuted = false;
        try {
            const std::string kind = job.at("kind").get<std::string>();
            if (kind == "group") report["results"] = run_group(job, caps);
            else if (kind == "certify") report["results"] = run_certify(job, caps, refuted);
            else if (kind == "heisenberg_suite")
                report["results"] = run_heisenberg_suite(job, caps, refuted);
            else if (kind == "affine_suite")
                report["results"] = run_affine_suite(job, caps, refuted);
            else if (kind == "covers") report["results"] = run_covers(job, caps, refuted);
            else if (kind == "schreier") report["results"] = run_schreier(job, caps, refuted);
            else if (kind == "forms") report["results"] = run_forms(job, refuted);
            else if (kind == "distance") report["results"] = run_distance(job);
            else throw std::invalid_argument("unknown job kind: " + kind);
        } catch (const std::exception& e) {
            report["error"] = e.what();
            status = "error";
            any_error = true;
        }
        if (status != "error" && refuted) {
            status = "refuted";
            any_refuted = true;
        }
        report["status"] = status;

        const std::string name = hash_hex(json_content_hash(report["job"])) + ".json";
        const auto path = std::filesystem::path(out_dir) / name;
        std::ofstream out(path);
        out << report.dump(2) << "\n";
        std::cout << name << " " << job.value("kind", "?") << " " << status << "\n";
    }
    if (any_error) return 1;
    if (any_refuted) return 2;
    return 0;
}
