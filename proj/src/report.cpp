#include "fpq/report.hpp"

#include <cmath>
#include <string>

#include "fpq/ext.hpp"
#include "fpq/path_algebra.hpp"
#include "fpq/spectral.hpp"

namespace fpq {

Json quiver_to_json(const BoundQuiver& bq) {
    Json j;
    j["num_vertices"] = bq.q.num_vertices;
    j["vertex_names"] = bq.q.vertex_names;
    Json arrows = Json::array();
    for (size_t i = 0; i < bq.q.arrows.size(); ++i) {
        arrows.push_back({{"name", bq.q.arrow_names[i]},
                          {"src", bq.q.arrows[i].src},
                          {"dst", bq.q.arrows[i].dst}});
    }
    j["arrows"] = std::move(arrows);
    Json rels = Json::array();
    for (const Relation& r : bq.relations) {
        Json terms = Json::array();
        for (const RelTerm& t : r.terms)
            terms.push_back({{"coeff", std::to_string(t.coeff)},
                             {"path", t.path.seq}});
        rels.push_back(std::move(terms));
    }
    j["relations"] = std::move(rels);
    return j;
}

BoundQuiver quiver_from_json(const Json& j) {
    BoundQuiver bq;
    bq.q.num_vertices = j.at("num_vertices").get<int>();
    bq.q.vertex_names = j.at("vertex_names").get<std::vector<std::string>>();
    for (const Json& a : j.at("arrows")) {
        int id = (int)bq.q.arrows.size();
        bq.q.arrows.push_back(
            {id, a.at("src").get<int>(), a.at("dst").get<int>()});
        bq.q.arrow_names.push_back(a.at("name").get<std::string>());
    }
    for (const Json& rel : j.at("relations")) {
        Relation r;
        for (const Json& term : rel) {
            RelTerm t;
            t.coeff = std::stoll(term.at("coeff").get<std::string>());
            t.path = Path::of(bq.q, term.at("path").get<std::vector<int>>());
            r.terms.push_back(std::move(t));
        }
        bq.relations.push_back(std::move(r));
    }
    bq.validate();
    return bq;
}

Json rep_to_json(const Rep<PrimeField>& m) {
    Json j;
    j["dims"] = m.dim;
    Json mats = Json::array();
    for (const auto& a : m.arr) {
        Json rows = Json::array();
        for (int i = 0; i < a.rows; ++i) {
            Json row = Json::array();
            for (int k = 0; k < a.cols; ++k)
                row.push_back(std::to_string(a.at(i, k)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    return j;
}

Rep<PrimeField> rep_from_json(const BoundQuiver& bq, PrimeField f,
                              const Json& j) {
    auto m = Rep<PrimeField>::zero_shape(bq, f,
                                         j.at("dims").get<std::vector<int>>());
    const Json& mats = j.at("matrices");
    if (mats.size() != m.arr.size())
        throw std::invalid_argument("rep_from_json: arrow count mismatch");
    for (size_t a = 0; a < m.arr.size(); ++a) {
        const Json& rows = mats[a];
        if ((int)rows.size() != m.arr[a].rows)
            throw std::invalid_argument("rep_from_json: row count mismatch");
        for (int i = 0; i < m.arr[a].rows; ++i) {
            const Json& row = rows[i];
            if ((int)row.size() != m.arr[a].cols)
                throw std::invalid_argument("rep_from_json: col count mismatch");
            for (int k = 0; k < m.arr[a].cols; ++k)
                m.arr[a].at(i, k) =
                    f.norm(std::stoll(row[k].get<std::string>()));
        }
    }
    return m;
}

Json adjacency_to_json(const std::vector<std::vector<long long>>& a) {
    Json rows = Json::array();
    for (const auto& r : a) {
        Json row = Json::array();
        for (long long x : r) row.push_back(std::to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<long long>> adjacency_from_json(const Json& j) {
    std::vector<std::vector<long long>> a;
    for (const Json& row : j) {
        std::vector<long long> r;
        for (const Json& x : row) r.push_back(std::stoll(x.get<std::string>()));
        a.push_back(std::move(r));
    }
    return a;
}

Json report_header(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    return j;
}

Json brick_list_certificate(const BrickList& bl) {
    Json j;
    j["field"] = {{"kind", "prime"}, {"p", std::to_string(bl.field.p)}};
    j["quiver"] = quiver_to_json(*bl.bq);
    j["cap"] = bl.cap;
    j["exhaustive"] = bl.exhaustive;
    Json bricks = Json::array();
    for (const auto& b : bl.bricks) bricks.push_back(rep_to_json(b));
    j["bricks"] = std::move(bricks);
    return j;
}

Json fpdim_certificate(const FpEstimate& est) {
    Json j = brick_list_certificate(est.bricks);
    j["max_set"] = est.max_size;
    j["tol"] = est.tol;
    Json w;
    w["members"] = est.witness.members;
    w["adjacency"] = adjacency_to_json(est.witness.adjacency);
    j["witness"] = std::move(w);
    j["rho"] = est.best;
    j["method"] = est.method;
    if (est.predicted) {
        j["predicted"] = *est.predicted;
        j["predicted_from"] = est.predicted_from;
    }
    return j;
}

RecheckResult recheck_certificate(const Json& report) {
    RecheckResult out;
    if (!report.contains("certificate")) {
        out.fail("no certificate in report");
        return out;
    }
    const Json& cert = report.at("certificate");
    try {
        BoundQuiver bq = quiver_from_json(cert.at("quiver"));
        PrimeField f{std::stoll(
            cert.at("field").at("p").get<std::string>())};
        std::vector<Rep<PrimeField>> bricks;
        for (const Json& bj : cert.at("bricks")) {
            auto m = rep_from_json(bq, f, bj);
            ++out.checks;
            auto rc = check_representation(m, bq);
            if (!rc.ok) {
                out.fail("listed module violates the relations: " + rc.message);
                continue;
            }
            if (!is_brick(m)) out.fail("listed module is not a brick");
            bricks.push_back(std::move(m));
        }
        if (!cert.contains("witness")) return out;

        const Json& w = cert.at("witness");
        auto members = w.at("members").get<std::vector<int>>();
        auto adj = adjacency_from_json(w.at("adjacency"));
        std::vector<const Rep<PrimeField>*> set;
        for (int idx : members) {
            if (idx < 0 || idx >= (int)bricks.size()) {
                out.fail("witness member index out of range");
                return out;
            }
            set.push_back(&bricks[idx]);
        }
        if (adj.size() != set.size()) {
            out.fail("adjacency size does not match witness set");
            return out;
        }
        PathAlgebra pa = PathAlgebra::build(bq);
        ExtContext<PrimeField> ctx(pa, f);
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t k = 0; k < set.size(); ++k) {
                ++out.checks;
                int h = hom_dim(*set[i], *set[k]);
                if (h != (i == k ? 1 : 0))
                    out.fail("witness set is not Hom-orthogonal at (" +
                             std::to_string(i) + "," + std::to_string(k) + ")");
                ++out.checks;
                int e = ctx.ext1_dim(*set[i], *set[k]);
                if ((long long)e != adj[i][k])
                    out.fail("adjacency entry mismatch at (" + std::to_string(i) +
                             "," + std::to_string(k) + "): recomputed " +
                             std::to_string(e) + ", certified " +
                             std::to_string(adj[i][k]));
            }
        if (cert.contains("rho")) {
            double tol = cert.value("tol", 1e-9);
            double rho = cert.at("rho").get<double>();
            ++out.checks;
            if (set.empty()) {
                if (rho != 0.0) out.fail("rho nonzero with empty witness set");
            } else {
                double fresh = spectral_radius(NonnegIntMatrix(adj), tol).value;
                if (std::abs(fresh - rho) > 2 * tol)
                    out.fail("rho mismatch: recomputed " + std::to_string(fresh) +
                             ", certified " + std::to_string(rho));
            }
        }
    } catch (const std::exception& e) {
        out.fail(std::string("recheck aborted: ") + e.what());
    }
    return out;
}

}  // namespace fpq
