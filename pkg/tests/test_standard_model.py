import pytest

from splpat.model.questionnaire import Activity
from splpat.model.standard import build_standard_model

MODEL = build_standard_model()


class TestQuestionnaire:
    def test_seventeen_questions(self):
        assert len(MODEL.schema.questions) == 17

    def test_activity_grouping(self):
        assert len(MODEL.schema.by_activity(Activity.CORE_ASSET)) == 5
        assert len(MODEL.schema.by_activity(Activity.PRODUCT_DEVELOPMENT)) == 5
        assert len(MODEL.schema.by_activity(Activity.MANAGEMENT)) == 7

    def test_management_covers_q11_to_q17(self):
        ids = [q.id for q in MODEL.schema.by_activity(Activity.MANAGEMENT)]
        assert ids == [f"q{i}" for i in range(11, 18)]

    def test_q12_text(self):
        assert "description and analysis of domain" in MODEL.schema.question("q12").text


class TestTermParameters:
    def test_input_shapes(self):
        shapes = {t.name: (t.shape.a, t.shape.b, t.shape.c, t.shape.d) for t in MODEL.input_terms}
        assert shapes == {
            "No": (0.0, 5.0, 16.5, 21.5),
            "Partial": (16.5, 21.5, 33.0, 38.0),
            "Yes": (33.0, 38.0, 50.0, 50.0),
        }

    def test_output_shapes(self):
        shapes = {t.name: (t.shape.a, t.shape.b, t.shape.c, t.shape.d) for t in MODEL.output_terms}
        assert shapes == {
            "Initial": (0.0, 5.0, 10.0, 15.0),
            "Repeatable": (10.0, 15.0, 20.0, 25.0),
            "Defined": (20.0, 25.0, 30.0, 35.0),
            "Managed": (30.0, 35.0, 40.0, 45.0),
            "Optimizing": (40.0, 45.0, 50.0, 50.0),
        }

    def test_output_ranks_double_as_cmm_levels(self):
        assert [t.rank for t in MODEL.output_terms] == [1, 2, 3, 4, 5]

    def test_partition_of_unity_at_handoff_point(self):
        mv = MODEL.input_terms.fuzzify(21.5)
        assert (mv["No"], mv["Partial"], mv["Yes"]) == (0.0, 1.0, 0.0)


class TestRuleTable:
    @pytest.mark.parametrize(
        "a1,a2,consequent",
        [
            ("Yes", "Yes", "Optimizing"),
            ("No", "No", "Initial"),
            ("Partial", "Partial", "Repeatable"),
            ("Yes", "No", "Defined"),
            ("No", "Yes", "Defined"),
            ("Yes", "Partial", "Managed"),
            ("Partial", "Yes", "Managed"),
            ("Partial", "No", "Repeatable"),
            ("No", "Partial", "Repeatable"),
        ],
    )
    def test_rule_present(self, a1, a2, consequent):
        assert MODEL.rule_base.consequent_for(a1, a2) == consequent

    def test_model_is_cached(self):
        assert build_standard_model() is MODEL
