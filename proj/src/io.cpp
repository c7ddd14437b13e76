#include "msv/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace msv {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Election parse_election(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("candidates") || !doc.contains("ballots"))
        throw ParseError("document must contain candidates and ballots");

    Election e;
    for (const auto& c : doc["candidates"]) {
        if (!c.is_string()) throw ParseError("candidate labels must be strings");
        e.labels.push_back(c.get<std::string>());
    }

    for (const auto& b : doc["ballots"]) {
        std::int64_t weight = b.value("weight", std::int64_t{1});
        if (weight < 1) throw ParseError("zero weight ballot");
        bool has_ranking = b.contains("ranking");
        bool has_approvals = b.contains("approvals");
        if (has_ranking == has_approvals)
            throw ParseError("each ballot needs exactly one of ranking or approvals");
        if (has_ranking) {
            RankedBallot rb;
            rb.weight = weight;
            for (const auto& l : b["ranking"]) rb.ranking.push_back(e.candidate(l.get<std::string>()));
            e.ranked.push_back(std::move(rb));
        } else {
            ApprovalBallot ab;
            ab.weight = weight;
            for (const auto& l : b["approvals"]) ab.approved.push_back(e.candidate(l.get<std::string>()));
            std::sort(ab.approved.begin(), ab.approved.end());
            ab.approved.erase(std::unique(ab.approved.begin(), ab.approved.end()), ab.approved.end());
            e.approval.push_back(std::move(ab));
        }
    }
    e.validate();
    e.canonicalize();
    return e;
}

std::string serialize_election(const Election& e) {
    Election canon = e;
    canon.canonicalize();
    ordered_json doc;
    doc["candidates"] = canon.labels;
    doc["ballots"] = ordered_json::array();
    for (const auto& b : canon.ranked) {
        ordered_json jb;
        jb["ranking"] = ordered_json::array();
        for (int c : b.ranking) jb["ranking"].push_back(canon.labels[c]);
        jb["weight"] = b.weight;
        doc["ballots"].push_back(std::move(jb));
    }
    for (const auto& b : canon.approval) {
        ordered_json jb;
        jb["approvals"] = ordered_json::array();
        for (int c : b.approved) jb["approvals"].push_back(canon.labels[c]);
        jb["weight"] = b.weight;
        doc["ballots"].push_back(std::move(jb));
    }
    return doc.dump(2) + "\n";
}

Election load_election(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open election file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_election(ss.str());
}

void save_election(const Election& e, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write election file: " + path);
    out << serialize_election(e);
}

}  // namespace msv
