import csv
import os
import sys
from dataclasses import asdict, dataclass, fields

from certification import (
    SMALLEST_SEARCH_N,
    SMALLEST_CERTIFIED_N,
    STRATEGIES,
    PolytopePoint,
    certificate_from_search,
    certify,
    class_list,
    default_point,
    expected_bound,
    parity_of,
    weighting_search,
    weights_for,
)
from combinatorics import (
    CycleType,
    Partition,
    character_table,
    constituent_table,
    derangement_classes,
    mn_character,
)
from oracle import (
    brute_cayley_spectrum,
    brute_max_coclique,
    canonical_coclique,
    is_coclique,
    orthogonality_check,
    predicted_spectrum,
    spectra_match,
)
from reports import get_report_writer, validate_payload
from reports.payloads import (
    certificate_row,
    character_table_payload,
    character_table_rows,
    classes_payload,
    classes_rows,
    spectrum_rows,
)
from spectra import CUSTOM, EXACT, HYBRID, Weighting, full_spectrum
from spectra.spectrum import MODES
from utils import InputParser, TextColors as TxtClr, dump_json, get_settings
from utils.errors import InvalidArgumentError

COMMANDS = ("char", "classes", "certify", "spectrum", "oracle", "search")
FORMATS = ("pretty", "json", "csv")
ORACLE_CHECKS = ("spectrum", "orthogonality", "mis", "canonical")
PARITIES = ("odd", "even")
REPORT_EXTENSIONS = (".json", ".csv")

# the two-parameter weights exist from n = 12 on
SMALLEST_SPECTRUM_N = 12


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs, after flags and environment are merged."""

    command: str
    n: int
    partition: str = None
    cycle_type: str = None
    table: bool = False
    full: bool = False
    t: int = 3
    parity: str = None
    point: tuple = None
    mode: str = EXACT
    threshold: int = None
    output_format: str = "pretty"
    out: str = None
    budget: int = None
    strategy: str = "lp"
    workers: int = None
    oracle_check: str = None
    oracle_max_n: int = None
    mis_max_n: int = None

    def to_dict(self):
        data = asdict(self)
        data["point"] = None if self.point is None else list(self.point)
        return data

    @classmethod
    def from_dict(cls, data):
        """Rebuilds and validates a config; unknown keys are refused."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InvalidArgumentError(f"Unknown run settings: {', '.join(unknown)}.")
        data = dict(data)
        if data.get("point") is not None:
            data["point"] = tuple(data["point"])
        config = cls(**data)
        config.validate()
        return config

    def parsed_point(self):
        if self.point is None:
            return None
        return PolytopePoint(InputParser.parse_rational(self.point[0]), InputParser.parse_rational(self.point[1]))

    def validate(self):
        """Rejects invalid flag combinations before any computation starts."""
        self._check_choice("command", self.command, COMMANDS)
        self._check_choice("mode", self.mode, MODES)
        self._check_choice("format", self.output_format, FORMATS)
        self._check_choice("strategy", self.strategy, STRATEGIES)
        if self.parity is not None:
            self._check_choice("parity", self.parity, PARITIES)
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgumentError(f"n must be a positive integer, got {self.n!r}.")

        for name in ("threshold", "budget", "workers", "oracle_max_n", "mis_max_n"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InvalidArgumentError(f"--{name.replace('_', '-')} must be at least 1, got {value}.")

        if self.point is not None:
            if self.command not in ("certify", "spectrum"):
                raise InvalidArgumentError("--point only applies to certify and spectrum.")
            if len(self.point) != 2:
                raise InvalidArgumentError(f"A point has two coordinates, got {list(self.point)}.")
            self.parsed_point()
        if self.threshold is not None and self.mode != HYBRID:
            raise InvalidArgumentError("--threshold only applies with --mode hybrid.")
        if self.budget is not None and self.command not in ("certify", "search"):
            raise InvalidArgumentError("--budget only applies to certify and search.")

        self._validate_command()
        self._validate_out()

    @staticmethod
    def _check_choice(name, value, choices):
        if value not in choices:
            raise InvalidArgumentError(f"{name} must be one of {', '.join(choices)}, got {value!r}.")

    def _validate_command(self):
        if self.command == "char":
            if self.table == (self.partition is not None or self.cycle_type is not None):
                raise InvalidArgumentError("char takes either a partition and a cycle type, or --table.")
            if not self.table and (self.partition is None or self.cycle_type is None):
                raise InvalidArgumentError("char needs both a partition and a cycle type.")
            if self.full and not self.table:
                raise InvalidArgumentError("--full only applies with --table.")
        elif self.command == "classes":
            if not 1 <= self.t <= self.n:
                raise InvalidArgumentError(f"t must lie in 1..{self.n}, got {self.t}.")
        elif self.command == "certify":
            if self.n < SMALLEST_CERTIFIED_N:
                raise InvalidArgumentError(f"certify supports n >= {SMALLEST_CERTIFIED_N}, got {self.n}.")
        elif self.command == "spectrum":
            if self.n < SMALLEST_SPECTRUM_N:
                raise InvalidArgumentError(
                    f"spectrum uses the two-parameter weights, which need n >= {SMALLEST_SPECTRUM_N}, got {self.n}."
                )
        elif self.command == "search":
            if self.n < SMALLEST_SEARCH_N:
                raise InvalidArgumentError(f"search needs n >= {SMALLEST_SEARCH_N}, got {self.n}.")
        elif self.command == "oracle":
            self._check_choice("oracle check", self.oracle_check, ORACLE_CHECKS)
            if self.out is not None:
                raise InvalidArgumentError("oracle checks print their result; --out is not supported.")

    def _validate_out(self):
        if self.out is None:
            return
        extension = os.path.splitext(self.out)[-1].lower()
        if extension not in REPORT_EXTENSIONS:
            raise InvalidArgumentError(f"--out must end in .json or .csv, got '{self.out}'.")
        if self.output_format != "pretty" and extension != f".{self.output_format}":
            raise InvalidArgumentError(f"--format {self.output_format} does not match '{self.out}'.")


class CertificateApp:
    """Runs one subcommand described by a RunConfig and returns its exit code."""

    def __init__(self, config):
        self._config = config
        self._dispatcher_menu = {
            "char": self._command_char,
            "classes": self._command_classes,
            "certify": self._command_certify,
            "spectrum": self._command_spectrum,
            "oracle": self._command_oracle,
            "search": self._command_search,
        }

    @staticmethod
    def _print_section_header(title, color=TxtClr.LC):
        """Prints a formatted section header with a given title and color."""
        print(f"\n{TxtClr.LC}{'=' * 40}{TxtClr.RESET}")
        print(f"{TxtClr.BOLD}{color}{title.center(40, '=')}{TxtClr.RESET}")
        print(f"{TxtClr.LC}{'=' * 40}{TxtClr.RESET}")

    @staticmethod
    def _print_field(label, value, colour=TxtClr.LY):
        print(f"{label:<22}{colour}{value}{TxtClr.RESET}")

    @staticmethod
    def _print_csv(rows):
        if not rows:
            return
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)

    def _emit(self, pretty, payload, rows, save, schema=None):
        """
        Sends one artifact where the flags say: a report file when --out is
        given, otherwise stdout in the chosen format.
        """
        config = self._config
        if config.out is not None:
            save(get_report_writer(config.out))
            if config.output_format == "pretty":
                pretty()
                print(f"\n{TxtClr.LG}Report written to {config.out}{TxtClr.RESET}")
            return

        if config.output_format == "json":
            data = payload()
            if schema is not None:
                validate_payload(data, schema)
            sys.stdout.write(dump_json(data))
        elif config.output_format == "csv":
            self._print_csv(rows())
        else:
            pretty()

    def _parse_partition(self, text):
        return Partition(InputParser.parse_partition_parts(text, self._config.n))

    def _parse_cycle_type(self, text):
        return CycleType(InputParser.parse_parts(text, self._config.n))

    # char
    def _command_char(self):
        """One character value, or a character table with --table."""
        config = self._config
        if config.table:
            return self._print_character_table()

        partition = self._parse_partition(config.partition)
        rho = self._parse_cycle_type(config.cycle_type)
        value = mn_character(partition, rho)
        shapes, classes, rows = [partition], [rho], [[value]]
        self._emit(
            lambda: print(value),
            lambda: character_table_payload(shapes, classes, rows),
            lambda: character_table_rows(shapes, classes, rows),
            lambda writer: writer.save_character_table(shapes, classes, rows),
        )
        return 0

    def _print_character_table(self):
        config = self._config
        n = config.n
        if config.full:
            shapes, classes, rows = character_table(n)
            labels = None
            title = f" CHARACTER TABLE OF Sym({n}) "
        else:
            parity = config.parity or parity_of(n)
            classes = class_list(n, parity)
            table = constituent_table(n, classes)
            labels = [label for label, _, _ in table]
            shapes = [shape for _, shape, _ in table]
            rows = [values for _, _, values in table]
            title = f" SMALL SHAPES, {parity.upper()} CLASSES, n={n} "

        def pretty():
            self._print_section_header(title, TxtClr.LB)
            names = labels or [str(shape) for shape in shapes]
            width = max(len(name) for name in names) + 2
            print(" " * width + "  ".join(TxtClr.paint(str(rho), TxtClr.LM) for rho in classes))
            for name, values in zip(names, rows):
                print(f"{TxtClr.LY}{name:<{width}}{TxtClr.RESET}" + "  ".join(str(value) for value in values))

        self._emit(
            pretty,
            lambda: character_table_payload(shapes, classes, rows, labels),
            lambda: character_table_rows(shapes, classes, rows, labels),
            lambda writer: writer.save_character_table(shapes, classes, rows, labels),
        )
        return 0

    # classes
    def _command_classes(self):
        """Every t-derangement class of Sym(n) with its size."""
        n, t = self._config.n, self._config.t
        classes = derangement_classes(n, t)
        total = sum(size for _, size in classes)

        def pretty():
            self._print_section_header(f" {t}-DERANGEMENT CLASSES, n={n} ", TxtClr.LB)
            if not classes:
                print(f"{TxtClr.LR}Every permutation of Sym({n}) fixes some {t}-subset.{TxtClr.RESET}")
            for rho, size in classes:
                print(f"{TxtClr.LM}{str(rho):<28}{TxtClr.RESET}{size}")
            print(f"\nTotal (graph degree): {TxtClr.LG}{total}{TxtClr.RESET}")

        self._emit(
            pretty,
            lambda: classes_payload(n, t, classes),
            lambda: classes_rows(classes),
            lambda writer: writer.save_classes(n, t, classes),
        )
        return 0

    # certify
    def _command_certify(self):
        """Builds and verifies the coclique bound certificate for n."""
        config = self._config
        certificate = certify(
            config.n,
            point=config.parsed_point(),
            mode=config.mode,
            threshold=config.threshold,
            workers=config.workers,
            budget=config.budget,
        )
        self._emit_certificate(certificate, f" CERTIFY n={config.n} ")
        return 0 if certificate.verified else 2

    def _emit_certificate(self, certificate, title, extra=None):
        def pretty():
            self._print_section_header(title, TxtClr.LG)
            for label, value in (extra or []):
                self._print_field(label, value)
            self._print_certificate(certificate)

        self._emit(
            pretty,
            certificate.to_dict,
            lambda: [certificate_row(certificate)],
            lambda writer: writer.save_certificate(certificate),
            schema="certificate",
        )

    def _print_certificate(self, certificate):
        fmt = InputParser.format_rational
        spectrum = certificate.spectrum
        weighting = certificate.weighting
        self._print_field("Case", certificate.parity_case)
        self._print_field("Strategy", certificate.strategy)
        self._print_field("Mode", certificate.mode)
        if certificate.point is not None:
            self._print_field("Point", certificate.point)
        for rho, omega in zip(weighting.classes, weighting.omegas):
            self._print_field(f"  weight on {rho}", fmt(omega), TxtClr.LM)
        self._print_field("Max eigenvalue", f"{fmt(spectrum.max_value)} on " + ", ".join(map(str, spectrum.max_attainers)))
        self._print_field("Min eigenvalue", f"{fmt(spectrum.min_value)} on " + ", ".join(map(str, spectrum.min_attainers)))
        if spectrum.large_degree_bound is not None:
            self._print_field("Large-degree bound", fmt(spectrum.large_degree_bound))
        self._print_field("Bound", f"6*({certificate.n - 3})! = {fmt(certificate.bound)}", TxtClr.LG)
        self._print_field(
            "Chromatic number",
            f"{certificate.chromatic_lower_bound} <= chi <= {certificate.chromatic_upper_bound}",
        )
        print(f"\n{TxtClr.BOLD}Certificate: {TxtClr.verdict(certificate.verified)}")

    # spectrum
    def _command_spectrum(self):
        """Spectrum of the two-parameter weighting at the given or default point."""
        config = self._config
        point = config.parsed_point() or default_point(config.n)
        weighting = weights_for(config.n, point)
        report = full_spectrum(weighting, mode=config.mode, threshold=config.threshold, workers=config.workers)

        def pretty():
            fmt = InputParser.format_rational
            self._print_section_header(f" SPECTRUM n={config.n} ", TxtClr.LB)
            self._print_field("Case", weighting.parity_case)
            self._print_field("Point", point)
            self._print_field("Mode", report.mode)
            self._print_field("Shapes evaluated", f"{report.computed_count} of {len(report.rows)}")
            if report.threshold is not None:
                self._print_field("Threshold", report.threshold)
                self._print_field("Large-degree bound", fmt(report.large_degree_bound))
            self._print_field("Max eigenvalue", f"{fmt(report.max_value)} on " + ", ".join(map(str, report.max_attainers)))
            self._print_field("Min eigenvalue", f"{fmt(report.min_value)} on " + ", ".join(map(str, report.min_attainers)))

        self._emit(
            pretty,
            report.to_dict,
            lambda: spectrum_rows(report),
            lambda writer: writer.save_spectrum(report),
            schema="spectrum",
        )
        return 0

    # oracle
    def _command_oracle(self):
        """Brute-force cross-checks on the explicit group."""
        config = self._config
        checks = {
            "spectrum": self._oracle_spectrum,
            "orthogonality": self._oracle_orthogonality,
            "mis": self._oracle_mis,
            "canonical": self._oracle_canonical,
        }
        result = checks[config.oracle_check]()
        result = {"check": config.oracle_check, "n": config.n, **result}

        def pretty():
            self._print_section_header(f" ORACLE {config.oracle_check.upper()} n={config.n} ", TxtClr.LM)
            for key, value in result.items():
                if key not in ("check", "n", "passed"):
                    self._print_field(key, value)
            print(f"\n{TxtClr.BOLD}Check: {TxtClr.verdict(result['passed'])}")

        self._emit(pretty, lambda: result, lambda: [{key: str(value) for key, value in result.items()}], None)
        return 0 if result["passed"] else 2

    def _oracle_spectrum(self):
        config = self._config
        classes = tuple(rho for rho, _ in derangement_classes(config.n, config.t))
        if not classes:
            raise InvalidArgumentError(f"Sym({config.n}) has no {config.t}-derangements to weight.")
        weighting = Weighting.unit(config.n, classes, CUSTOM)
        method = get_settings().eigen_method
        brute = brute_cayley_spectrum(config.n, weighting, method=method, max_n=config.oracle_max_n)
        predicted = predicted_spectrum(weighting)
        return {"t": config.t, "method": method, "eigenvalues": len(brute), "passed": spectra_match(brute, predicted)}

    def _oracle_orthogonality(self):
        return {"passed": orthogonality_check(self._config.n)}

    def _oracle_mis(self):
        n = self._config.n
        size = brute_max_coclique(n, max_n=self._config.mis_max_n)
        expected = expected_bound(n)
        return {"independenceNumber": size, "expected": expected, "passed": size == expected}

    def _oracle_canonical(self):
        n = self._config.n
        family = canonical_coclique(n, max_n=self._config.oracle_max_n)
        independent = is_coclique(n, family)
        return {
            "size": len(family),
            "expected": expected_bound(n),
            "independent": independent,
            "passed": independent and len(family) == expected_bound(n),
        }

    # search
    def _command_search(self):
        """Searches for a weighting at n and certifies it."""
        config = self._config
        result = weighting_search(config.n, budget=config.budget, strategy=config.strategy)
        certificate = certificate_from_search(result, workers=config.workers)
        extra = [
            ("Pool", f"{result.pool} ({len(result.weighting.classes)} classes)"),
            ("Free parameters", result.free_parameters),
            ("Exact checks", result.attempts),
        ]
        self._emit_certificate(certificate, f" SEARCH n={config.n} ", extra)
        return 0 if certificate.verified else 2

    def run(self):
        """Dispatches the configured command and returns its exit code."""
        return self._dispatcher_menu[self._config.command]()
