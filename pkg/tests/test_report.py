import json

from src.thompson.enumstats import aggregate, cumulative
from src.thompson.models import PermutationResult, StatsRecord, VerifyResult
from src.thompson.report import ReportGenerator


def test_summary_csv_rows():
    text = ReportGenerator().summary_csv([aggregate(4, 2), aggregate(4, 1), aggregate(2, 0)])
    lines = text.splitlines()
    assert lines[0] == "width,height,total,max_orbits,largest_classes"
    assert lines[1] == '4,2,81,4,"2"'
    assert lines[2] == '4,1,16,2,"1,2"'
    assert lines[3] == '2,0,1,1,"1"'


def test_summary_csv_of_cumulative_record():
    record = cumulative([aggregate(2, 1)])
    assert ReportGenerator().summary_csv([record]).splitlines()[1] == ',,4,1,"1"'


def test_histogram_csv():
    text = ReportGenerator().histogram_csv([StatsRecord(width=3, height=1, histogram={2: 3, 1: 5})])
    assert text == "width,height,orbits,count\n3,1,1,5\n3,1,2,3\n"


def test_stats_json():
    data = json.loads(ReportGenerator().stats_json([aggregate(4, 1)]))
    assert data[0]["total"] == 16
    assert data[0]["largest_classes"] == [1, 2]
    assert data[0]["histogram"] == {"1": 8, "2": 8}


def test_distribution_svg_is_deterministic():
    reporter = ReportGenerator()
    record = aggregate(3, 2)
    first = reporter.distribution_svg(record)
    assert "<svg" in first
    assert "w=3 h=2" in first
    assert first == reporter.distribution_svg(record)


def test_permutation_text():
    result = PermutationResult(word=[0, 0, 1], cycles=[[0, 2], [1, 6, 3, 5, 7, 4]], orbits=2, leaves=7)
    assert ReportGenerator().permutation_text(result) == "(0,2)(1,6,3,5,7,4)  orbits=2  leaves=7\n"


def test_verify_text():
    results = [
        VerifyResult(width=3, height=2, checked=27, agreed=27),
        VerifyResult(width=1, height=0, checked=1, agreed=0, mismatches=[[0]]),
    ]
    assert ReportGenerator().verify_text(results) == "w=3 h=2: 27/27 agree\nw=1 h=0: 0/1 agree\n  mismatch: 0\n"
