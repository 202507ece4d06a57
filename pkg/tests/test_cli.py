import json
import subprocess
import sys


def run_cli(*args, check=True):
    proc = subprocess.run([sys.executable, "-m", "chipcarbon", *args],
                          capture_output=True)
    if check:
        assert proc.returncode == 0, proc.stderr.decode()
    return proc


class TestEstimate:
    def test_breakdown_table(self):
        proc = run_cli("estimate", "--testcase", "IndustryFPGA1", "--apps", "3",
                       "--lifetime", "2", "--volume", "1e6")
        lines = proc.stdout.decode().splitlines()
        assert lines[0] == "platform,component,kg_co2e"
        values = {line.split(",")[1]: float(line.split(",")[2]) for line in lines[1:]}
        assert values["app_dev"] < values["design"] < values["manufacturing"]
        assert values["operational"] == max(
            v for k, v in values.items() if k != "total")

    def test_zero_volume_design_only(self):
        proc = run_cli("estimate", "--testcase", "IndustryASIC1", "--volume", "0",
                       "--format", "record")
        record = json.loads(proc.stdout)
        b = record["results"]["breakdown"]
        assert b["design"] > 0
        assert b["total"] == b["design"]

    def test_unknown_testcase_exit_1_names_available(self):
        proc = run_cli("estimate", "--testcase", "NoSuchChip", check=False)
        assert proc.returncode == 1
        err = proc.stderr.decode()
        assert "IndustryFPGA1" in err and "IndustryASIC2" in err


class TestCompare:
    def test_dnn_ten_apps_fpga_favored(self):
        proc = run_cli("compare", "--domain", "DNN", "--apps", "10",
                       "--format", "record")
        record = json.loads(proc.stdout)
        assert record["results"]["verdict"] == "FPGA-favored"
        assert 0.65 <= record["results"]["ratio"] <= 0.85

    def test_crypto_two_apps_fpga_favored(self):
        proc = run_cli("compare", "--domain", "Crypto", "--apps", "2",
                       "--format", "record")
        assert json.loads(proc.stdout)["results"]["verdict"] == "FPGA-favored"

    def test_identical_platforms_tie(self, tmp_path):
        overrides = tmp_path / "zero_dev.yaml"
        overrides.write_text(
            "appdev:\n  frontend_months: 0\n  backend_months: 0\n"
            "  config_hours_fpga: 0\n")
        proc = run_cli("--params", str(overrides), "compare", "--domain", "Crypto",
                       "--apps", "1", "--area-ratio", "1.0", "--power-ratio", "1.0",
                       "--format", "record")
        assert json.loads(proc.stdout)["results"]["verdict"] == "tie"

    def test_record_carries_full_parameter_echo(self):
        proc = run_cli("compare", "--domain", "DNN", "--format", "record")
        record = json.loads(proc.stdout)
        assert record["parameters"]["design"]["total_employees"] == 20000
        assert record["parameters"]["operation"]["duty_cycle"] == 0.25
        assert record["version"]
        assert record["inputs"]["domain"] == "DNN"


class TestSweepCommand:
    def test_dnn_numapps_annotates_a2f_at_six(self, tmp_path):
        out = tmp_path / "sweep.csv"
        proc = run_cli("sweep", "--domain", "DNN", "--sweep", "NumApps:1:8:8",
                       "--apps", "5", "--out", str(out))
        text = proc.stdout.decode()
        assert out.read_text() == text
        assert "# crossover,A2F,6," in text
        assert text.splitlines()[0].startswith("value,fpga_total,asic_total,fpga_design")

    def test_bad_sweep_syntax_exit_1(self):
        proc = run_cli("sweep", "--domain", "DNN", "--sweep", "NumApps:1:8", check=False)
        assert proc.returncode == 1
        assert "VAR:START:STOP:STEPS" in proc.stderr.decode()

    def test_unknown_variable_exit_1(self):
        proc = run_cli("sweep", "--domain", "DNN", "--sweep", "Wat:1:8:8", check=False)
        assert proc.returncode == 1
        assert "NumApps" in proc.stderr.decode()

    def test_bare_variable_uses_stock_grid(self):
        proc = run_cli("sweep", "--domain", "DNN", "--sweep", "AppLifetime", "--apps", "5")
        rows = [l for l in proc.stdout.decode().splitlines()
                if l and not l.startswith(("#", "value"))]
        assert len(rows) == 24
        assert rows[0].startswith("0.2,") and rows[-1].startswith("2.5,")


class TestHeatmapCommand:
    def test_single_cell_matches_compare_ratio(self):
        grid = run_cli("heatmap", "--domain", "DNN",
                       "--sweep", "NumApps:5:5:1", "--sweep", "AppLifetime:2:2:1",
                       "--format", "record")
        cell = json.loads(grid.stdout)["results"]["cells"][0][0]
        cmp_record = run_cli("compare", "--domain", "DNN", "--apps", "5",
                             "--lifetime", "2", "--format", "record")
        assert cell == json.loads(cmp_record.stdout)["results"]["ratio"]

    def test_requires_two_axes(self):
        proc = run_cli("heatmap", "--domain", "DNN", "--sweep", "NumApps:1:8:8",
                       check=False)
        assert proc.returncode == 1


class TestTimelineCommand:
    def test_imgproc_45_years_jumps_at_15_and_30(self):
        proc = run_cli("timeline", "--domain", "ImgProc", "--lifetime", "1",
                       "--horizon", "45", "--step", "1", "--format", "record")
        points = json.loads(proc.stdout)["results"]["points"]
        jump_years = []
        for a, b in zip(points, points[1:]):
            if b["fpga"]["manufacturing"] > a["fpga"]["manufacturing"] + 1e-9:
                jump_years.append(b["t_years"])
        assert jump_years == [15.0, 30.0]


class TestDeterminism:
    def test_byte_identical_repeats(self):
        invocations = [
            ("compare", "--domain", "DNN", "--apps", "10", "--format", "record"),
            ("sweep", "--domain", "DNN", "--sweep", "AppLifetime:0.2:2.5:24"),
            ("estimate", "--testcase", "IndustryFPGA2", "--apps", "3"),
        ]
        for args in invocations:
            first = run_cli(*args).stdout
            second = run_cli(*args).stdout
            assert first == second
