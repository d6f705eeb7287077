#include <doctest.h>

#include "core/internal.hpp"
#include "core/tree.hpp"
#include "tree_builder.hpp"
#include "verify/differential.hpp"
#include "verify/rng.hpp"
#include "verify/script.hpp"

using namespace rbt;
using test::finish;
using test::mk;

namespace {

const Node& node(const Tree& t, NodeHandle h) { return t.store()[h]; }

}  // namespace

TEST_CASE("insert into empty tree yields a single black root") {
    Tree t(Variant::RB);
    CHECK(t.insert(10));
    REQUIRE(t.size() == 1);
    CHECK(node(t, t.root()).key == 10);
    CHECK(node(t, t.root()).color == Color::Black);
    CHECK(t.stats().rotations == 0);
    CHECK(t.validate().empty());
}

TEST_CASE("ascending insert straightens with one rotation") {
    Tree t(Variant::RB);
    for (std::int64_t k : {10, 20, 30}) t.insert(k);
    CHECK(t.stats().rotations == 1);
    const Node& root = node(t, t.root());
    CHECK(root.key == 20);
    CHECK(root.color == Color::Black);
    CHECK(node(t, root.left).key == 10);
    CHECK(node(t, root.left).color == Color::Red);
    CHECK(node(t, root.right).key == 30);
    CHECK(node(t, root.right).color == Color::Red);
    CHECK(t.validate().empty());
}

TEST_CASE("inner-child insert needs the double rotation") {
    Tree t(Variant::RB);
    for (std::int64_t k : {10, 20, 15}) t.insert(k);
    CHECK(t.stats().rotations == 2);
    const Node& root = node(t, t.root());
    CHECK(root.key == 15);
    CHECK(node(t, root.left).key == 10);
    CHECK(node(t, root.left).color == Color::Red);
    CHECK(node(t, root.right).key == 20);
    CHECK(node(t, root.right).color == Color::Red);
    CHECK(t.validate().empty());
}

TEST_CASE("red uncle resolves by recoloring alone") {
    Tree t(Variant::RB);
    for (std::int64_t k : {20, 10, 30, 5}) t.insert(k);
    CHECK(t.stats().rotations == 0);
    CHECK(t.validate().empty());
    CHECK(node(t, t.root()).color == Color::Black);
}

TEST_CASE("deleting a red leaf does nothing else") {
    Tree t(Variant::RB);
    for (std::int64_t k : {10, 20, 30}) t.insert(k);
    t.reset_stats();
    CHECK(t.erase(10));
    CHECK(t.stats().rotations == 0);
    CHECK(t.validate().empty());
    CHECK(t.inorder_keys() == std::vector<std::int64_t>{20, 30});
}

TEST_CASE("black sibling with black children reddens and stops") {
    Tree t(Variant::RB);
    finish(t, mk(t, 20, Color::Black, mk(t, 10, Color::Black),
                 mk(t, 30, Color::Black)));
    REQUIRE(t.validate().empty());

    CHECK(t.erase(10));
    CHECK(t.stats().rotations == 0);
    const Node& root = node(t, t.root());
    CHECK(root.key == 20);
    CHECK(node(t, root.right).key == 30);
    CHECK(node(t, root.right).color == Color::Red);
    CHECK(t.validate().empty());
}

TEST_CASE("degree-2 delete goes through the successor") {
    Tree t(Variant::RB);
    for (std::int64_t k : {50, 30, 70, 20, 40, 60, 80}) t.insert(k);
    CHECK(t.erase(50));
    CHECK(node(t, t.root()).key == 60);  // smallest of the right subtree
    CHECK(t.validate().empty());
    CHECK_FALSE(t.contains(50));
}

TEST_CASE("degree-1 delete copies the red child up") {
    Tree t(Variant::RB);
    finish(t, mk(t, 20, Color::Black,
                 mk(t, 10, Color::Black, mk(t, 5, Color::Red)),
                 mk(t, 30, Color::Black)));
    REQUIRE(t.validate().empty());
    CHECK(t.erase(10));
    CHECK(t.stats().rotations == 0);
    CHECK(t.validate().empty());
    CHECK(t.inorder_keys() == std::vector<std::int64_t>{5, 20, 30});
}

TEST_CASE("insert spends at most two rotations") {
    SplitMix64 rng(41);
    Tree t(Variant::RB);
    for (int i = 0; i < 5000; i++) {
        std::uint64_t before = t.stats().rotations;
        t.insert(static_cast<std::int64_t>(rng.below(1 << 16)));
        CHECK(t.stats().rotations - before <= 2);
    }
    CHECK(t.validate().empty());
}

TEST_CASE("differential fuzz stays clean") {
    OpScript script = random_script(1234, 10000, 1 << 20);
    DiffReport report = differential_run(script, {Variant::RB});
    CHECK(report.clean);
    CHECK(report.step_bound_violations == 0);
}
