#include "doctest.h"
#include "springer/json_io.hpp"

using namespace springer;
using nlohmann::json;

TEST_CASE("labels round-trip through JSON") {
    for (Family f : {Family::A, Family::BC, Family::D})
        for (const auto& l : all_irreps(f, 4)) {
            INFO(to_string(l));
            CHECK(label_from_json(to_json(l)) == l);
        }
}

TEST_CASE("label JSON input forms") {
    CHECK(label_from_json(json::parse(R"({"family":"A","partition":[2,1]})")) == label_from_partition({2, 1}));
    CHECK(label_from_json(json::parse(R"({"family":"BC","top":[1],"bottom":[1]})")) ==
          label_from_bipartition(Family::BC, {1}, {1}));
    CHECK(label_from_json(json::parse(R"({"family":"D","top":[1],"bottom":[1],"kappa":1})")) ==
          label_from_bipartition(Family::D, {1}, {1}, 1));
    CHECK_THROWS(label_from_json(json::parse(R"({"family":"Q","partition":[1]})")));
}

TEST_CASE("embeddings round-trip and are validated") {
    Embedding e{EmbeddingKind::D_triple, 0, 3, 2, 1};
    CHECK(embedding_from_json(to_json(e)) == e);
    CHECK_THROWS(embedding_from_json(json::parse(R"({"kind":"C_WrWDq","r":1,"p":1,"q":1})")));
}

TEST_CASE("reports carry the schema version") {
    auto j = to_json(verify(ClassFamily::B, 2));
    CHECK(j.at("schema_version") == kOutputSchemaVersion);
    CHECK(j.at("records").size() == enumerate_classes(ClassFamily::B, 2).size());
}
