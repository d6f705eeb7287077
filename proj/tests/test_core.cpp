#include <doctest.h>

#include <cctype>
#include <string>

#include "core/internal.hpp"
#include "core/tree.hpp"
#include "tree_builder.hpp"
#include "verify/rng.hpp"

using namespace rbt;
using test::finish;
using test::mk;

namespace {

// Minimal DOT checker covering what to_dot can emit: used as an independent
// grammar oracle, not a general Graphviz parser.
bool parses_as_dot(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
    };
    auto literal = [&](const std::string& word) {
        skip_ws();
        if (text.compare(i, word.size(), word) != 0) return false;
        i += word.size();
        return true;
    };
    auto ident = [&] {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) ||
                text[i] == '_' || text[i] == '-'))
            i++;
        return i > start;
    };
    auto attr_block = [&] {
        skip_ws();
        if (i >= text.size() || text[i] != '[') return true;  // optional
        while (i < text.size() && text[i] != ']') {
            if (text[i] == '"') {
                i++;
                while (i < text.size() && text[i] != '"') i++;
                if (i >= text.size()) return false;
            }
            i++;
        }
        if (i >= text.size()) return false;
        i++;  // ']'
        return true;
    };

    if (!literal("digraph")) return false;
    if (!ident()) return false;
    if (!literal("{")) return false;
    while (true) {
        skip_ws();
        if (i < text.size() && text[i] == '}') break;
        if (!ident()) return false;
        skip_ws();
        if (text.compare(i, 2, "->") == 0) {
            i += 2;
            if (!ident()) return false;
        } else if (!attr_block()) {
            return false;
        }
        if (!literal(";")) return false;
    }
    if (!literal("}")) return false;
    skip_ws();
    return i == text.size();
}

Tree random_tree(Variant v, SplitMix64& rng, std::size_t n) {
    Tree t(v);
    for (std::size_t i = 0; i < n; i++)
        t.insert(static_cast<std::int64_t>(rng.below(4 * n + 1)));
    return t;
}

std::vector<NodeHandle> all_nodes(const Tree& t) {
    std::vector<NodeHandle> out, stack;
    if (!is_nil(t.root())) stack.push_back(t.root());
    while (!stack.empty()) {
        NodeHandle h = stack.back();
        stack.pop_back();
        out.push_back(h);
        if (!is_nil(t.store()[h].left)) stack.push_back(t.store()[h].left);
        if (!is_nil(t.store()[h].right)) stack.push_back(t.store()[h].right);
    }
    return out;
}

}  // namespace

TEST_CASE("rotate_left restructures the three-node subtree") {
    Tree t(Variant::RB);
    NodeHandle b = mk(t, 20, Color::Black);
    NodeHandle c = mk(t, 30, Color::Red, b);
    NodeHandle a = mk(t, 10, Color::Black, kNil, c);
    finish(t, a);

    NodeHandle top = rotate_left(t, a);
    CHECK(top == c);
    CHECK(t.root() == c);
    CHECK(t.store()[c].left == a);
    CHECK(t.store()[a].right == b);
    CHECK(t.store()[b].parent == a);
    CHECK(t.stats().rotations == 1);
    // colors stay on their nodes; recoloring is the caller's business
    CHECK(t.store()[c].color == Color::Red);
    CHECK(t.store()[a].color == Color::Black);
    CHECK(t.inorder_keys() == std::vector<std::int64_t>{10, 20, 30});
}

TEST_CASE("rotate_right mirrors rotate_left") {
    Tree t(Variant::RB);
    NodeHandle b = mk(t, 20, Color::Black);
    NodeHandle a = mk(t, 10, Color::Red, kNil, b);
    NodeHandle c = mk(t, 30, Color::Black, a);
    finish(t, c);

    NodeHandle top = rotate_right(t, c);
    CHECK(top == a);
    CHECK(t.store()[a].right == c);
    CHECK(t.store()[c].left == b);
    CHECK(t.stats().rotations == 1);
    CHECK(t.inorder_keys() == std::vector<std::int64_t>{10, 20, 30});
}

TEST_CASE("rotations are inverse pairs") {
    SplitMix64 rng(11);
    Tree t = random_tree(Variant::RB, rng, 64);
    for (NodeHandle h : all_nodes(t)) {
        if (is_nil(t.store()[h].right)) continue;
        Tree before = t.clone();
        NodeHandle top = rotate_left(t, h);
        rotate_right(t, top);
        CHECK(t.same_shape(before));
        break;
    }
}

TEST_CASE("rotations preserve inorder keys across random trees") {
    SplitMix64 rng(7);
    std::size_t rotations_done = 0;
    while (rotations_done < 1000) {
        Tree t = random_tree(Variant::RB, rng, 40);
        for (NodeHandle h : all_nodes(t)) {
            auto before = t.inorder_keys();
            if (!is_nil(t.store()[h].right)) {
                rotate_left(t, h);
                CHECK(t.inorder_keys() == before);
                rotations_done++;
            } else if (!is_nil(t.store()[h].left)) {
                rotate_right(t, h);
                CHECK(t.inorder_keys() == before);
                rotations_done++;
            }
        }
    }
}

#ifdef NDEBUG
TEST_CASE("rotation precondition violations are rejected without mutation") {
    Tree t(Variant::RB);
    finish(t, mk(t, 5, Color::Black, mk(t, 3, Color::Red)));
    Tree before = t.clone();
    CHECK(rotate_left(t, t.root()) == kNil);  // no right child
    CHECK(rotate_right(t, kNil) == kNil);
    CHECK(t.same_shape(before));
    CHECK(t.stats().rotations == 0);
}
#endif

TEST_CASE("search") {
    Tree t(Variant::RB);
    CHECK_FALSE(t.contains(5));
    CHECK(t.insert(7));
    CHECK(t.contains(7));
    CHECK_FALSE(t.contains(5));
    CHECK_FALSE(t.insert(7));  // duplicate is a no-op
    CHECK(t.size() == 1);
}

TEST_CASE("validate accepts the smallest tree and flags variant rules") {
    Tree t(Variant::RB);
    finish(t, mk(t, 5, Color::Black));
    CHECK(t.validate().empty());

    // black root with two red children: fine classically, overfull for 2-3
    Tree rb(Variant::RB);
    finish(rb, mk(rb, 20, Color::Black, mk(rb, 10, Color::Red),
                  mk(rb, 30, Color::Red)));
    CHECK(rb.validate().empty());

    Tree rb23(Variant::RB23);
    finish(rb23, mk(rb23, 20, Color::Black, mk(rb23, 10, Color::Red),
                    mk(rb23, 30, Color::Red)));
    auto violations = rb23.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == 'e');

    Tree llrb(Variant::LLRB);
    finish(llrb, mk(llrb, 20, Color::Black, kNil, mk(llrb, 30, Color::Red)));
    violations = llrb.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == 'f');
}

TEST_CASE("validate flags unequal black path counts") {
    Tree t(Variant::RB);
    // left path has two blacks below the root, right path three
    NodeHandle l = mk(t, 10, Color::Black, mk(t, 5, Color::Black));
    NodeHandle rl = mk(t, 25, Color::Black, mk(t, 22, Color::Black));
    NodeHandle rr = mk(t, 40, Color::Black, mk(t, 35, Color::Black));
    NodeHandle r = mk(t, 30, Color::Black, rl, rr);
    finish(t, mk(t, 20, Color::Black, l, r));

    bool saw_rule_d = false;
    for (const Violation& v : t.validate()) saw_rule_d |= v.rule == 'd';
    CHECK(saw_rule_d);
}

TEST_CASE("validate flags red-red, red root and broken parent links") {
    Tree t(Variant::RB);
    finish(t, mk(t, 2, Color::Red));
    REQUIRE(t.validate().size() == 1);
    CHECK(t.validate()[0].rule == 'b');

    Tree u(Variant::RB);
    NodeHandle inner = mk(u, 10, Color::Red, mk(u, 5, Color::Red));
    finish(u, mk(u, 20, Color::Black, inner, mk(u, 30, Color::Black)));
    bool saw_c = false, saw_d = false;
    for (const Violation& v : u.validate()) {
        saw_c |= v.rule == 'c';
        saw_d |= v.rule == 'd';
    }
    CHECK(saw_c);
    CHECK(saw_d);

    Tree w(Variant::RB);
    NodeHandle a = mk(w, 1, Color::Red);
    finish(w, mk(w, 2, Color::Black, a));
    w.store()[a].parent = a;  // sever the back link
    bool saw_l = false;
    for (const Violation& v : w.validate()) saw_l |= v.rule == 'l';
    CHECK(saw_l);
}

TEST_CASE("inorder keys") {
    Tree t(Variant::RB);
    CHECK(t.inorder_keys().empty());
    for (std::int64_t k : {3, 1, 2}) t.insert(k);
    CHECK(t.inorder_keys() == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("to_dot emits the documented shape") {
    Tree empty(Variant::RB);
    std::string dot = empty.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label") == std::string::npos);
    CHECK(parses_as_dot(dot));

    Tree t(Variant::RB);
    finish(t, mk(t, 5, Color::Black));
    dot = t.to_dot();
    CHECK(dot.find("\"5 [black]\"") != std::string::npos);
    CHECK(parses_as_dot(dot));
}

TEST_CASE("to_dot parses for random trees") {
    SplitMix64 rng(23);
    for (int i = 0; i < 100; i++) {
        Tree t = random_tree(i % 2 ? Variant::RB : Variant::LLRB, rng,
                             1 + rng.below(50));
        CHECK(parses_as_dot(t.to_dot()));
    }
}

TEST_CASE("node store recycles freed slots") {
    Tree t(Variant::RB);
    for (std::int64_t k = 0; k < 100; k++) t.insert(k);
    for (std::int64_t k = 0; k < 100; k++) t.erase(k);
    std::size_t baseline = t.store().allocated();
    for (int round = 0; round < 10; round++) {
        for (std::int64_t k = 0; k < 100; k++) t.insert(k);
        for (std::int64_t k = 0; k < 100; k++) t.erase(k);
    }
    CHECK(t.store().allocated() == baseline);
    CHECK(t.store().nil_intact());
}

TEST_CASE("clone and shape comparison") {
    SplitMix64 rng(5);
    Tree t = random_tree(Variant::RB23, rng, 50);
    Tree c = t.clone();
    CHECK(c.same_shape(t));
    CHECK(c.stats().rotations == 0);  // clone starts with fresh counters
    c.insert(1 << 20);
    CHECK_FALSE(c.same_shape(t));
}
