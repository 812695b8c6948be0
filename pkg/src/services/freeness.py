"""
Verificador de liberdade.

Decide exatamente se B_ξ é a identidade percorrendo, nível a nível da
árvore, o fecho das seções D_w(ξ) sob {D_0, D_1}: B_ξ = 1 se e só se
toda seção age trivialmente no primeiro nível. A varredura aplica a
decisão a todas as palavras livremente reduzidas até um comprimento.
"""

import sys
import threading
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass

from tqdm import tqdm

from src.core.config import get_settings
from src.core.exceptions import NotInvertibleError
from src.core.logging import get_logger
from src.domain.entities import (
    QPM_SIZE,
    Automaton,
    InitialRef,
    Permutation,
    StateWord,
    SweepReport,
    SweepRow,
    TreeWord,
    TrivialityCertificate,
    Verdict,
)
from src.domain.entities.words import invert_letter
from src.services.aleshin import build_b, chi
from src.services.automata import act_word, dual_automaton, is_invertible

logger = get_logger(__name__)


# ──────────────────────────────────────────────
#  Ação no primeiro nível
# ──────────────────────────────────────────────

def first_level_action(a: Automaton, xi: StateWord) -> Permutation:
    """
    Permutação x ↦ A_ξ(x) das palavras de uma letra.

    Raises:
        NotInvertibleError: autômato não invertível.
    """
    if not is_invertible(a):
        raise NotInvertibleError()
    return Permutation(tuple(act_word(a, xi, (x,))[0] for x in range(a.num_letters)))


# ──────────────────────────────────────────────
#  Procedimento de decisão
# ──────────────────────────────────────────────

class SectionClosureDecider:
    """
    Decide B_ξ = 1 por BFS sobre as seções, nível a nível.

    Cada seção é testada ao ser descoberta (na menor profundidade em que
    aparece), o que torna `min_level` exato. Para o autômato B o teste
    do primeiro nível é χ; para os demais, a ação em cada letra.

    O cache opcional guarda palavras já certificadas como identidade:
    essas seções não são reexpandidas. O veredito e `min_level` não
    dependem dele; `orbit_explored` conta as seções efetivamente visitadas.
    """

    def __init__(self, automaton: Automaton | None = None, cache_enabled: bool = False):
        self.automaton = automaton or build_b()
        dual = dual_automaton(self.automaton)
        self._sections = [InitialRef(dual, x) for x in range(dual.num_states)]
        self._use_chi = self.automaton == build_b()
        self._cache_enabled = cache_enabled
        self._identity_cache: set[StateWord] = set()
        self._lock = threading.Lock()

    def _acts_trivially_on_first_level(self, xi: StateWord) -> bool:
        if self._use_chi:
            return chi(xi) == 1
        a = self.automaton
        return all(act_word(a, xi, (x,)) == (x,) for x in range(a.num_letters))

    def _known_identity(self, xi: StateWord) -> bool:
        if not self._cache_enabled:
            return False
        with self._lock:
            return xi in self._identity_cache

    def decide(self, xi: StateWord) -> TrivialityCertificate:
        self.automaton.check_state_word(xi)
        word = tuple(xi)

        visited: dict[StateWord, TreeWord] = {word: ()}
        frontier = [word]
        depth = 0
        while frontier:
            for section in frontier:
                if self._known_identity(section):
                    continue
                if not self._acts_trivially_on_first_level(section):
                    return TrivialityCertificate(
                        word=word,
                        verdict=Verdict.NONTRIVIAL,
                        orbit_explored=len(visited),
                        witness_vertex=visited[section],
                        min_level=depth + 1,
                    )

            discovered = []
            for section in frontier:
                if self._known_identity(section):
                    continue
                vertex = visited[section]
                for x, d_x in enumerate(self._sections):
                    child = d_x(section)
                    if child not in visited:
                        visited[child] = vertex + (x,)
                        discovered.append(child)
            frontier = discovered
            depth += 1

        # Fecho esgotado: todas as seções visitadas são identidade
        if self._cache_enabled:
            with self._lock:
                self._identity_cache.update(visited)
        return TrivialityCertificate(
            word=word,
            verdict=Verdict.IDENTITY,
            orbit_explored=len(visited),
        )


def is_identity(xi: StateWord, automaton: Automaton | None = None) -> TrivialityCertificate:
    """
    Certificado exato para "A_ξ = 1?" (por padrão, sobre B).

    ξ não precisa ser irredutível.
    """
    return SectionClosureDecider(automaton).decide(xi)


def min_nontrivial_level(xi: StateWord, automaton: Automaton | None = None) -> int | None:
    """Menor nível em que A_ξ age não trivialmente; None se A_ξ = 1."""
    return is_identity(xi, automaton).min_level


# ──────────────────────────────────────────────
#  Varredura
# ──────────────────────────────────────────────

def iter_reduced_words(length: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """Palavras livremente reduzidas de comprimento exato, em ordem lexicográfica."""
    if len(prefix) > length:
        return
    if len(prefix) == length:
        yield prefix
        return
    forbidden = invert_letter(prefix[-1]) if prefix else None
    for q in range(QPM_SIZE):
        if q != forbidden:
            yield from iter_reduced_words(length, prefix + (q,))


def count_reduced_words(max_len: int) -> int:
    """Σ 6·5^{ℓ−1} para ℓ = 1..max_len."""
    return sum(6 * 5 ** (n - 1) for n in range(1, max_len + 1))


@dataclass(frozen=True)
class Shard:
    """Fatia da varredura: palavras com `prefix` e comprimento em `lengths`."""

    prefix: tuple[int, ...]
    lengths: tuple[int, ...]


def plan_shards(max_len: int, prefix_len: int) -> list[Shard]:
    """
    Uma fatia por prefixo reduzido de comprimento p = min(prefix_len, L),
    mais uma para as palavras mais curtas que p.
    """
    p = min(prefix_len, max_len)
    shards = []
    if p > 1:
        shards.append(Shard(prefix=(), lengths=tuple(range(1, p))))
    lengths = tuple(range(p, max_len + 1))
    shards.extend(Shard(prefix=prefix, lengths=lengths) for prefix in iter_reduced_words(p))
    return shards


RowTuple = tuple[tuple[int, ...], int, int | None, int]


def run_shard(shard: Shard, cache_enabled: bool) -> list[RowTuple]:
    """Executa uma fatia; devolve tuplas simples para atravessar processos."""
    decider = SectionClosureDecider(build_b(), cache_enabled=cache_enabled)
    rows: list[RowTuple] = []
    for length in shard.lengths:
        for xi in iter_reduced_words(length, shard.prefix):
            cert = decider.decide(xi)
            rows.append((xi, length, cert.min_level, cert.orbit_explored))
    return rows


class FreenessService:
    """
    Varredura limitada de liberdade sobre B.

    Fatias disjuntas por prefixo rodam num ProcessPoolExecutor (ou em
    linha com jobs=1); cada fatia usa o próprio cache, de modo que o
    relatório não depende do escalonamento.
    """

    def __init__(
        self,
        jobs: int | None = None,
        cache_enabled: bool | None = None,
        progress: bool | None = None,
    ):
        settings = get_settings()
        self.jobs = jobs or settings.effective_jobs
        self.cache_enabled = (
            settings.sweep_cache_enabled if cache_enabled is None else cache_enabled
        )
        self.progress = settings.sweep_progress if progress is None else progress
        self.shard_prefix_len = settings.sweep_shard_prefix_len

    def verify(self, max_len: int) -> SweepReport:
        if max_len < 0:
            raise ValueError(f"max_len deve ser não negativo (recebido {max_len})")

        started = time.perf_counter()
        shards = plan_shards(max_len, self.shard_prefix_len) if max_len else []
        logger.info(
            "Iniciando varredura",
            max_len=max_len,
            words=count_reduced_words(max_len),
            shards=len(shards),
            jobs=self.jobs,
        )

        rows: list[RowTuple] = []
        with tqdm(
            total=len(shards),
            desc=f"Varredura L={max_len}",
            unit="fatia",
            file=sys.stderr,
            disable=not self.progress,
        ) as progress_bar:
            if self.jobs == 1 or len(shards) <= 1:
                for shard in shards:
                    rows.extend(run_shard(shard, self.cache_enabled))
                    progress_bar.update(1)
            else:
                workers = min(self.jobs, len(shards))
                with ProcessPoolExecutor(max_workers=workers) as executor:
                    futures = [
                        executor.submit(run_shard, shard, self.cache_enabled)
                        for shard in shards
                    ]
                    for future in as_completed(futures):
                        rows.extend(future.result())
                        progress_bar.update(1)

        rows.sort(key=lambda row: row[0])
        report = SweepReport(
            max_length=max_len,
            rows=[SweepRow(*row) for row in rows],
            timing=time.perf_counter() - started,
        )
        logger.info(
            "Varredura concluída",
            words=report.words_checked,
            all_nontrivial=report.all_nontrivial,
            elapsed=round(report.timing, 3),
        )
        return report


def verify_freeness(max_len: int, jobs: int | None = None) -> SweepReport:
    """Todas as palavras reduzidas não vazias com |ξ| ≤ max_len."""
    return FreenessService(jobs=jobs).verify(max_len)
