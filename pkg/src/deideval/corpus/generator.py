"""Deterministic synthetic note generation from placeholder templates.

A self-contained seeded fake-data engine: no external dependency, so the
same (template, seed) pair produces byte-identical notes everywhere. Each
category draws from its own PRNG stream seeded from (category, template
id, seed), which keeps values independent across categories and stable
when a template is edited elsewhere.
"""
from __future__ import annotations

from .._hashing import SplitMix64, stable_hash64
from . import wordlists as words
from .types import (
    ClinicalNote,
    CorpusError,
    EntityCategory,
    PLACEHOLDER_PATTERN,
)

DEFAULT_MIN_ENTITY_LENGTH = 3


def _gen_name(rng: SplitMix64) -> str:
    return f"{rng.choice(words.FIRST_NAMES)} {rng.choice(words.LAST_NAMES)}"


def _gen_contact_number(rng: SplitMix64) -> str:
    area, mid, last = rng.digits(3), rng.digits(3), rng.digits(4)
    style = rng.below(3)
    if style == 0:
        return f"({area}) {mid}-{last}"
    if style == 1:
        return f"{area}-{mid}-{last}"
    return f"+1-{area}-{mid}-{last}"


def _gen_id(rng: SplitMix64) -> str:
    style = rng.below(3)
    if style == 0:
        return f"MRN-{rng.digits(7)}"
    if style == 1:
        letters = "".join(chr(ord("A") + rng.below(26)) for _ in range(2))
        return f"{letters}{rng.digits(6)}"
    return rng.digits(8)


def _gen_email(rng: SplitMix64) -> str:
    first = rng.choice(words.FIRST_NAMES).lower()
    last = rng.choice(words.LAST_NAMES).lower()
    domain = rng.choice(words.EMAIL_DOMAINS)
    style = rng.below(3)
    if style == 0:
        return f"{first}.{last}@{domain}"
    if style == 1:
        return f"{first[0]}{last}{rng.digits(2)}@{domain}"
    return f"{first}_{last}@{domain}"


def _gen_location(rng: SplitMix64) -> str:
    city = rng.choice(words.CITIES)
    if rng.below(2) == 0:
        return city
    return f"{city}, {rng.choice(words.STATES)}"


def _gen_date(rng: SplitMix64) -> str:
    year = 1972 + rng.below(52)
    month = 1 + rng.below(12)
    day = 1 + rng.below(28)
    style = rng.below(4)
    if style == 0:
        return f"{year:04d}-{month:02d}-{day:02d}"
    if style == 1:
        return f"{words.MONTHS[month - 1]} {day}, {year}"
    if style == 2:
        return f"{day:02d}/{month:02d}/{year}"
    return f"{day} {words.MONTHS_SHORT[month - 1]} {year}"


def _gen_url(rng: SplitMix64) -> str:
    domain = rng.choice(words.URL_DOMAINS)
    path = rng.choice(words.URL_PATHS)
    return f"https://{domain}/{path}/{rng.digits(4)}"


def _gen_age_above_89(rng: SplitMix64) -> str:
    age = 90 + rng.below(20)
    style = rng.below(3)
    if style == 0:
        return f"{age} years old"
    if style == 1:
        return f"{age}-year-old"
    return f"aged {age}"


def _gen_institution(rng: SplitMix64) -> str:
    return rng.choice(words.INSTITUTIONS)


def _gen_holiday(rng: SplitMix64) -> str:
    return rng.choice(words.HOLIDAYS)


_GENERATORS = {
    EntityCategory.NAME: _gen_name,
    EntityCategory.CONTACT_NUMBER: _gen_contact_number,
    EntityCategory.ID: _gen_id,
    EntityCategory.EMAIL: _gen_email,
    EntityCategory.LOCATION: _gen_location,
    EntityCategory.DATE: _gen_date,
    EntityCategory.URL: _gen_url,
    EntityCategory.AGE_ABOVE_89: _gen_age_above_89,
    EntityCategory.INSTITUTION: _gen_institution,
    EntityCategory.HOLIDAY: _gen_holiday,
}


def generate_entity_value(
    category: EntityCategory,
    rng: SplitMix64,
    min_length: int = DEFAULT_MIN_ENTITY_LENGTH,
) -> str:
    """Draw one fake value for `category`, retrying below `min_length`."""
    for _ in range(16):
        value = _GENERATORS[category](rng)
        if len(value) >= min_length:
            return value
    raise CorpusError(
        f"could not generate a value of length >= {min_length} for {category.value}"
    )


def generate_synthetic_note(
    template,
    seed: int,
    note_id: str | None = None,
    min_entity_length: int = DEFAULT_MIN_ENTITY_LENGTH,
) -> ClinicalNote:
    """Fill every ⟦CATEGORY⟧ placeholder with a deterministic fake entity.

    Same (template, seed) always yields an identical note text; the
    generated spans are recorded as annotations with the placeholder's
    category.
    """
    rngs: dict[EntityCategory, SplitMix64] = {}
    pieces: list[str] = []
    spans: list[tuple[int, int, EntityCategory]] = []
    cursor = 0
    consumed = 0
    for match in PLACEHOLDER_PATTERN.finditer(template.body):
        try:
            category = EntityCategory(match.group(1))
        except ValueError:
            raise CorpusError(f"unknown category {match.group(1)!r}") from None
        static = template.body[consumed : match.start()]
        pieces.append(static)
        cursor += len(static)
        rng = rngs.get(category)
        if rng is None:
            rng = SplitMix64(stable_hash64("entity", category.value, template.id, seed=seed))
            rngs[category] = rng
        value = generate_entity_value(category, rng, min_entity_length)
        pieces.append(value)
        spans.append((cursor, cursor + len(value), category))
        cursor += len(value)
        consumed = match.end()
    pieces.append(template.body[consumed:])
    text = "".join(pieces)
    return ClinicalNote.from_spans(note_id if note_id is not None else template.id, text, spans)
