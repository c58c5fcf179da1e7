/*
   Copyright (c) 2026 The mlculp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "mlculp/dataset.hpp"
#include "mlculp/error.hpp"
#include "mlculp/folds.hpp"
#include "mlculp/io.hpp"
#include "oracles.hpp"

using namespace mlculp;

namespace {

LoadError::Kind load_error_kind(const std::string& text, bool arff, std::vector<std::string> labels = {"y1", "y2"}) {
  std::istringstream in(text);
  try {
    if (arff) {
      read_arff(in, labels);
    } else {
      read_csv(in);
    }
  } catch (const LoadError& e) {
    return e.kind();
  }
  FAIL("expected a load error");
  return LoadError::Kind::io;
}

const char* small_arff = R"(% comment
@relation 'small: -C 2'
@attribute f1 numeric
@attribute colour {red,green,blue}
@attribute f2 REAL
@attribute y1 {0,1}
@attribute y2 {0,1}
@data
1.5,green,2,1,0
-0.5,red,4,0,1
3,blue,6,1,1
)";

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("append, select and stack rows") {
    FeatureMatrix m;
    m.append_row(std::vector<double>{1, 2});
    m.append_row(std::vector<double>{3, 4});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK_THROWS(m.append_row(std::vector<double>{1}));
    std::vector<std::size_t> pick{1};
    auto s = m.select_rows(pick);
    CHECK(s(0, 1) == 4);
    auto v = vstack(m, s);
    CHECK(v.rows() == 3);
    CHECK(v(2, 0) == 3);
  }
}

TEST_SUITE("dataset") {
  TEST_CASE("min-max scaling maps columns to [0, 1] and constant columns to 0") {
    FeatureMatrix m(3, 2, 0.0);
    m(0, 0) = 2;
    m(1, 0) = 4;
    m(2, 0) = 3;
    m(0, 1) = m(1, 1) = m(2, 1) = 7;
    min_max_scale(m);
    CHECK(m(0, 0) == 0.0);
    CHECK(m(1, 0) == 1.0);
    CHECK(m(2, 0) == 0.5);
    CHECK(m(1, 1) == 0.0);
  }

  TEST_CASE("validate rejects inconsistent shapes") {
    Dataset d = gen::dataset(FeatureMatrix(3, 2, 0.0), LabelMatrix(3, 2, 0));
    CHECK_NOTHROW(d.validate());
    d.label_names.pop_back();
    CHECK_THROWS(d.validate());
    d = gen::dataset(FeatureMatrix(2, 2, 0.0), LabelMatrix(3, 2, 0));
    CHECK_THROWS(d.validate());
    d = gen::dataset(FeatureMatrix(3, 2, 0.0), LabelMatrix(3, 2, 0));
    d.labels(0, 0) = 2;
    CHECK_THROWS(d.validate());
    d = gen::dataset(FeatureMatrix(3, 2, 0.0), LabelMatrix(3, 2, 0));
    d.features(1, 1) = std::nan("");
    CHECK_THROWS(d.validate());
  }

  TEST_CASE("views expose the selected rows") {
    gen::Rng rng(3);
    Dataset d = gen::dataset(gen::features(rng, 6, 2, false), gen::labels(rng, 4, 3, 0.5));
    CHECK(d.num_labeled() == 4);
    CHECK(d.num_unlabeled() == 2);
    auto unl = UnlabeledView::unlabeled_rows(d);
    CHECK(unl.rows() == std::vector<std::size_t>{4, 5});
    CHECK(UnlabeledView::all_rows(d).size() == 6);
    LabeledView lv(d, {2, 0});
    CHECK(lv.features(0)[1] == d.features(2, 1));
    CHECK(lv.label_matrix().rows() == 2);
    CHECK(LabeledView::all(d).size() == 4);
  }
}

TEST_SUITE("io") {
  TEST_CASE("ARFF subset with nominal one-hot encoding") {
    std::istringstream in(small_arff);
    Dataset d = read_arff(in, {"y1", "y2"});
    CHECK(d.name == "small");
    CHECK(d.num_labeled() == 3);
    CHECK(d.num_labels() == 2);
    CHECK(d.source_attribute_count == 3);
    CHECK(d.feature_names ==
          std::vector<std::string>{"f1", "colour=red", "colour=green", "colour=blue", "f2"});
    CHECK(d.features(0, 0) == 1.5);
    CHECK(d.features(0, 2) == 1.0);
    CHECK(d.features(0, 1) == 0.0);
    CHECK(d.features(2, 4) == 6.0);
    CHECK(d.labels(1, 0) == 0);
    CHECK(d.labels(2, 1) == 1);
  }

  TEST_CASE("ARFF label order follows the given label names") {
    std::istringstream in(small_arff);
    Dataset d = read_arff(in, {"y2", "y1"});
    CHECK(d.label_names == std::vector<std::string>{"y2", "y1"});
    CHECK(d.labels(0, 0) == 0);
    CHECK(d.labels(0, 1) == 1);
  }

  TEST_CASE("ARFF load errors are distinct") {
    CHECK(load_error_kind("@relation x\n@attribute a string\n@data\n", true) == LoadError::Kind::unknown_attribute_type);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@attribute y2 {0,1}\n@data\n1,2,0\n",
                          true) == LoadError::Kind::non_binary_label);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@attribute y2 {0,1}\n@data\n?,1,0\n",
                          true) == LoadError::Kind::missing_value);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@attribute y2 {0,1}\n@data\n1,1\n",
                          true) == LoadError::Kind::malformed_row);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@data\n1,1\n", true) ==
          LoadError::Kind::unknown_label);
    CHECK(load_error_kind("@attribute a\n@data\n", true) == LoadError::Kind::malformed_header);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@attribute y2 {0,1}\n@data\n",
                          true) == LoadError::Kind::empty_dataset);
    CHECK(load_error_kind("@relation x\n@attribute a numeric\n@attribute y1 {0,1}\n@attribute y2 {0,1}\n@data\n"
                          "{0 1,1 1}\n",
                          true) == LoadError::Kind::malformed_row);
  }

  TEST_CASE("CSV with features, labels, ids and unlabeled rows") {
    std::istringstream in("id,x,label:a,y,label:b\nr1,1,1,2,0\nr2,3,0,4,1\nq1,5,,6,\n");
    Dataset d = read_csv(in);
    CHECK(d.num_labeled() == 2);
    CHECK(d.num_unlabeled() == 1);
    CHECK(d.label_names == std::vector<std::string>{"a", "b"});
    CHECK(d.feature_names == std::vector<std::string>{"x", "y"});
    CHECK(d.ids == std::vector<std::string>{"r1", "r2", "q1"});
    CHECK(d.features(2, 1) == 6.0);
    CHECK(d.labels(1, 1) == 1);
  }

  TEST_CASE("CSV with two features, one label and no rows is an empty-dataset error") {
    CHECK(load_error_kind("x,y,label:a\n", false) == LoadError::Kind::empty_dataset);
  }

  TEST_CASE("CSV load errors") {
    CHECK(load_error_kind("x,label:a\n1,2\n", false) == LoadError::Kind::non_binary_label);
    CHECK(load_error_kind("x,label:a\nnan,1\n", false) == LoadError::Kind::missing_value);
    CHECK(load_error_kind("x,label:a\n,1\n", false) == LoadError::Kind::missing_value);
    CHECK(load_error_kind("x,label:a\n1\n", false) == LoadError::Kind::malformed_row);
    CHECK(load_error_kind("x,label:a\nabc,1\n", false) == LoadError::Kind::malformed_row);
    CHECK(load_error_kind("x,label:a\n1,\n2,1\n", false) == LoadError::Kind::malformed_row);
    CHECK(load_error_kind("", false) == LoadError::Kind::malformed_header);
  }

  TEST_CASE("MULAN label XML") {
    std::istringstream in(R"(<?xml version="1.0"?>
<labels xmlns="http://mulan.sourceforge.net/labels">
<label name="Beach"></label>
<label name='Sunset'/>
<label name="a&amp;b"></label>
</labels>)");
    CHECK(read_mulan_labels(in) == std::vector<std::string>{"Beach", "Sunset", "a&b"});
  }

  TEST_CASE("CSV round trip is bit-identical") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Dataset d = gen::dataset(gen::features(rng, 8, 3, false), gen::labels(rng, 6, 2, 0.5));
      d.features(0, 0) = 1.0 / 3.0;
      d.features(1, 1) = -1e-300;
      std::stringstream buf;
      write_csv(buf, d);
      Dataset back = read_csv(buf);
      CHECK(back.features == d.features);
      CHECK(back.labels == d.labels);
      CHECK(back.label_names == d.label_names);
    }
  }

  TEST_CASE("label XML lookup strips train and test suffixes") {
    auto dir = std::filesystem::temp_directory_path() / "mlculp_xml_lookup";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "scene.xml") << "<labels><label name=\"x\"/></labels>";
    CHECK(find_label_xml(dir / "scene-train.arff") == dir / "scene.xml");
    CHECK(find_label_xml(dir / "scene_test.arff") == dir / "scene.xml");
    CHECK(find_label_xml(dir / "other.arff").empty());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("multiple files are concatenated and scaled jointly") {
    auto dir = std::filesystem::temp_directory_path() / "mlculp_concat";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "a.csv") << "x,label:a\n0,1\n2,0\n";
    std::ofstream(dir / "b.csv") << "x,label:a\n4,1\n";
    std::ofstream(dir / "c.csv") << "z,label:a\n4,1\n";
    Dataset d = load_datasets({dir / "a.csv", dir / "b.csv"}, DatasetFormat::csv);
    CHECK(d.num_labeled() == 3);
    CHECK(d.features(1, 0) == 0.5);
    CHECK(d.features(2, 0) == 1.0);
    CHECK_THROWS_AS(load_datasets({dir / "a.csv", dir / "c.csv"}, DatasetFormat::csv), LoadError);
    CHECK_THROWS_AS(load_dataset(dir / "missing.csv", DatasetFormat::csv), LoadError);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("format names") {
    CHECK(parse_dataset_format("mulan-arff") == DatasetFormat::mulan_arff);
    CHECK(parse_dataset_format("csv") == DatasetFormat::csv);
    CHECK_THROWS_AS(parse_dataset_format("xlsx"), InvalidArgument);
  }
}

TEST_SUITE("folds") {
  TEST_CASE("fold sizes: divisible and remainder cases") {
    gen::Rng rng(1);
    auto y = gen::labels(rng, 10, 3, 0.4);
    auto five = make_folds(y, 5, 0).fold_sizes();
    CHECK(five == std::vector<std::size_t>{2, 2, 2, 2, 2});
    auto three = make_folds(y, 3, 0).fold_sizes();
    CHECK(three == std::vector<std::size_t>{4, 3, 3});
  }

  TEST_CASE("invalid fold counts") {
    LabelMatrix y(10, 2, 0);
    CHECK_THROWS_AS(make_folds(y, 11, 0), InvalidArgument);
    CHECK_THROWS_AS(make_folds(y, 1, 0), InvalidArgument);
  }

  TEST_CASE("assignment equals the integer-arithmetic oracle") {
    gen::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = rng.size(2, 150);
      const std::size_t folds = rng.size(2, std::min<std::size_t>(n, 12));
      auto y = gen::labels(rng, n, rng.size(1, 8), rng.real(0.0, 0.8));
      const std::uint64_t seed = rng.engine()();
      CHECK(make_folds(y, folds, seed).assignment == oracle::folds(y, folds, seed));
    }
  }

  TEST_CASE("100x4 labels in 10 folds: per-fold positives within 1 of the oracle") {
    gen::Rng rng(77);
    auto y = gen::labels(rng, 100, 4, 0.3);
    auto plan = make_folds(y, 10, 5);
    auto expected = oracle::folds(y, 10, 5);
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t f = 0; f < 10; ++f) {
        long got = 0, want = 0;
        for (std::size_t i = 0; i < 100; ++i) {
          got += (plan.assignment[i] == f) * y(i, c);
          want += (expected[i] == f) * y(i, c);
        }
        CHECK(std::abs(got - want) <= 1);
      }
    }
  }

  TEST_CASE("property: partition, balanced sizes, bounded positives, determinism") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = rng.size(2, 120);
      const std::size_t k = rng.size(2, std::min<std::size_t>(n, 10));
      auto y = gen::labels(rng, n, rng.size(1, 6), rng.real(0.0, 0.9));
      const std::uint64_t seed = rng.engine()();
      auto plan = make_folds(y, k, seed);
      REQUIRE(plan.assignment.size() == n);
      auto sizes = plan.fold_sizes();
      CHECK(*std::min_element(sizes.begin(), sizes.end()) >= 1);
      CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
      for (std::size_t c = 0; c < y.cols(); ++c) {
        std::vector<std::size_t> per_fold(k, 0);
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i) {
          per_fold[plan.assignment[i]] += y(i, c);
          total += y(i, c);
        }
        const std::size_t bound = (total + k - 1) / k + 1;
        INFO("n=" << n << " k=" << k << " L=" << y.cols() << " total=" << total);
        CHECK(*std::max_element(per_fold.begin(), per_fold.end()) <= bound);
      }
      CHECK(make_folds(y, k, seed).assignment == plan.assignment);
    }
  }

  TEST_CASE("split partitions the labeled rows") {
    gen::Rng rng(5);
    Dataset d = gen::dataset(gen::features(rng, 10, 2, false), gen::labels(rng, 10, 2, 0.5));
    auto plan = make_folds(d, 5, 42);
    auto first = split(d, plan, 0);
    CHECK(first.train.size() == 8);
    CHECK(first.test.size() == 2);
    std::multiset<std::size_t> seen;
    for (std::size_t f = 0; f < 5; ++f) {
      auto s = split(d, plan, f);
      for (auto r : s.test.rows()) seen.insert(r);
      std::set<std::size_t> train(s.train.rows().begin(), s.train.rows().end());
      for (auto r : s.test.rows()) CHECK(train.count(r) == 0);
      CHECK(s.test_truth == d.labels.select_rows(s.test.rows()));
    }
    CHECK(seen == std::multiset<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto again = split(d, make_folds(d, 5, 42), 3);
    CHECK(again.test.rows() == split(d, plan, 3).test.rows());
    CHECK_THROWS_AS(split(d, plan, 5), InvalidArgument);
  }
}
