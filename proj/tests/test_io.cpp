#include <gtest/gtest.h>

#include <filesystem>

#include "corpus.hpp"
#include "pcube/constructions.hpp"
#include "pcube/error.hpp"
#include "pcube/io.hpp"

using namespace pcube;

TEST(Io, CubeRoundTrip) {
  for (const Cube& c : corpus::all_cubes()) EXPECT_EQ(read_cube(write_cube(c)), c);
}

TEST(Io, CubeIgnoresCommentsAndBlankLines) {
  const std::string text = std::string("# worked cube\n\n") + corpus::kC4 + "\n# trailing\n";
  EXPECT_EQ(read_cube(text), corpus::C4());
}

TEST(Io, CubeRowsAreOneBased) {
  const std::string text = write_cube(corpus::C4());
  EXPECT_NE(text.find("\n1 1 1\n"), std::string::npos);
  EXPECT_EQ(corpus::C4().row(0), (Row{0, 0, 0}));
}

TEST(Io, MalformedCubesThrow) {
  EXPECT_THROW(read_cube(""), ParseError);
  EXPECT_THROW(read_cube("pcube v=3 k=2 n=2\n1 1\n"), ParseError);
  EXPECT_THROW(read_cube("pcube v=3 k=2 lambda=1 n=2\n1 4\n"), ParseError);
  EXPECT_THROW(read_cube("pcube v=3 k=2 lambda=1 n=2\n1 2 3\n"), ParseError);
  EXPECT_THROW(read_cube("pcube v=3 k=2 lambda=1 n=2\n1 x\n"), ParseError);
  EXPECT_THROW(read_cube("pcube v=3 k=2 lambda=1 n=2\n1 2\n1 2\n"), ParseError);
  EXPECT_THROW(read_cube("design v=3\n"), ParseError);
}

TEST(Io, DiffsetRoundTrip) {
  const ConstructedDiffset c = paley_nd(7, 3);
  const DiffsetFile f = read_diffset(write_diffset(c.group, c.diffset));
  EXPECT_EQ(f.group, c.group);
  EXPECT_EQ(f.diffset.tuples, c.diffset.tuples);
  EXPECT_EQ(f.diffset.k, 3);
  EXPECT_EQ(f.diffset.lambda, 1);

  const GroupTable g = presented_group_16_4();
  const DiffsetFile f3 = read_diffset(write_diffset(g, corpus::D3()));
  EXPECT_EQ(f3.group, g);
  EXPECT_TRUE(is_nd_difference_set(f3.group, f3.diffset).ok);
}

TEST(Io, DiffsetWithSuppliedGroup) {
  const GroupTable g = group_from_name("Z4xZ4");
  std::string text = write_diffset(g, corpus::D4());
  text.replace(text.find("group=Z4xZ4"), 11, "group=custom");
  EXPECT_THROW(read_diffset(text), ParseError);
  const GroupTable custom(g.rows(), "custom");
  EXPECT_EQ(read_diffset(text, custom).diffset.tuples.size(), 6u);
  EXPECT_THROW(read_diffset(text, cyclic_group(7)), ParseError);
}

TEST(Io, DiffsetTupleCountMustMatch) {
  EXPECT_THROW(read_diffset("ndiffset v=7 k=3 lambda=1 n=2 group=Z7\n0 1\n0 2\n"), ParseError);
  EXPECT_THROW(read_diffset("ndiffset v=7 k=3 lambda=1 n=2 group=Z7\n0 1\n0 2\n0 9\n"), ParseError);
}

TEST(Io, GroupRoundTrip) {
  for (const char* name : {"Z7", "Z7sZ3", "SD16_4", "SG16_13"}) {
    const GroupTable g = group_from_name(name);
    const GroupTable back = read_group(write_group(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.name(), g.name());
  }
  EXPECT_THROW(read_group("group v=2 name=bad\n1 0\n1 0\n"), ParseError);
}

TEST(Io, ActionRoundTrip) {
  const Permutation shift = parse_cycles("(1,2,3,4,5,6,7)", 7);
  const ActionFile a{7, 3, {Isotopy{{shift, shift, shift}}}};
  const ActionFile back = read_action(write_action(a));
  EXPECT_EQ(back.v, 7);
  EXPECT_EQ(back.n, 3);
  ASSERT_EQ(back.generators.size(), 1u);
  EXPECT_EQ(back.generators[0], a.generators[0]);
  EXPECT_THROW(read_action("action v=3 n=2 generators=1\n1 2 3\n1 1 2\n"), ParseError);
}

TEST(Io, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "pcube_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "c5.oa").string();
  write_text_file(path, write_cube(corpus::C5()));
  EXPECT_EQ(read_cube(read_text_file(path)), corpus::C5());
  EXPECT_THROW(read_text_file((dir / "missing.oa").string()), ParseError);
  std::filesystem::remove_all(dir);
}
