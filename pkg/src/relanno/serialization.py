"""Export/import of the triplet output schema and brat standoff export.

The JSON layout is one record per sentence:

    {"SentText": ...,
     "EntityMentions":   [{"Text", "Start", "End"}, ...],
     "RelationMentions": [{"Arg1Text", "Arg1Start", "Arg2Text", "Arg2Start",
                           "RelationNames": [...]}, ...]}

Start/End offsets are a strict superset of the text-only fields: they
disambiguate entity strings that occur more than once in a sentence.
Import tolerates files without offsets by binding each text to its first
occurrence. Output is canonical (2-space indent, fixed key order, sorted
records) so identical sessions serialize byte-identically.
"""

from __future__ import annotations

import json
import re

from . import errors
from .metrics import ERROR, validate_session
from .model import EntityMention, RelationLabel, RelationMention, Sentence, Span
from .session import AnnotationSession

_BRAT_LABEL_SAFE = re.compile(r"[^A-Za-z0-9_]")


def export(session: AnnotationSession) -> str:
    """Serialize a valid session to canonical JSON text.

    Every sentence gets a record, including sentences with no
    annotations. Output is a pure function of session content (the event
    log and op history do not influence it). Raises InvalidSession when
    validation reports any error.
    """
    _require_valid(session)
    records = []
    for sentence in session.sentences:
        ents = sorted(
            (e for e in session.entities.values() if e.sentence_id == sentence.id),
            key=lambda e: (e.span.start, e.span.end),
        )
        rels = [r for r in session.relations.values() if r.sentence_id == sentence.id]
        by_id = {e.id: e for e in ents}
        rels.sort(
            key=lambda r: (
                by_id[r.arg1].span.start,
                by_id[r.arg2].span.start,
                by_id[r.arg1].text,
                by_id[r.arg2].text,
            )
        )
        records.append(
            {
                "SentText": sentence.text,
                "EntityMentions": [
                    {"Text": e.text, "Start": e.span.start, "End": e.span.end} for e in ents
                ],
                "RelationMentions": [
                    {
                        "Arg1Text": by_id[r.arg1].text,
                        "Arg1Start": by_id[r.arg1].span.start,
                        "Arg2Text": by_id[r.arg2].text,
                        "Arg2Start": by_id[r.arg2].span.start,
                        "RelationNames": list(r.relation_names),
                    }
                    for r in rels
                ],
            }
        )
    return json.dumps(records, indent=2, ensure_ascii=False)


def import_session(text: str) -> AnnotationSession:
    """Rebuild a session from exported (or hand-written) JSON text.

    Offsets may be present or absent per mention; absent offsets bind
    the mention text to its first occurrence. The label set is the union
    of all RelationNames in first-appearance order. Semantic breakage
    that still fits the schema (e.g. a self-pair) is imported as-is and
    left for `metrics.validate_session` to flag.

    Raises ParseError (not JSON), SchemaError (shape/type problems, with
    the field path), or SpanMismatch (text disagrees with the slice its
    offsets denote, with the record index).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise errors.SchemaError("top level must be a list of sentence records", "$")

    sentences: list[Sentence] = []
    entities: list[EntityMention] = []
    relations: dict[tuple[int, int, int], list[str]] = {}
    label_order: list[str] = []
    next_entity_id = 0

    for i, record in enumerate(data):
        path = f"[{i}]"
        if not isinstance(record, dict):
            raise errors.SchemaError("sentence record must be an object", path)
        sent_text = _required_str(record, "SentText", path)
        if "\n" in sent_text:
            raise errors.SchemaError("sentence text must not contain newlines", f"{path}.SentText")
        if not sent_text.strip():
            raise errors.SchemaError("sentence text must not be blank", f"{path}.SentText")
        sentences.append(Sentence(i, sent_text))

        raw_entities = _optional_list(record, "EntityMentions", path)
        spans: list[tuple[int, int]] = []
        for j, entry in enumerate(raw_entities):
            epath = f"{path}.EntityMentions[{j}]"
            if not isinstance(entry, dict):
                raise errors.SchemaError("entity mention must be an object", epath)
            mention_text = _required_str(entry, "Text", epath)
            span = _bind_span(sent_text, mention_text, entry.get("Start"), entry.get("End"), i, epath)
            if span in spans:
                raise errors.SchemaError(f"duplicate span {span}", epath)
            spans.append(span)

        span_to_id: dict[tuple[int, int], int] = {}
        sorted_entities = sorted(
            zip(spans, (e["Text"] for e in raw_entities)), key=lambda item: item[0]
        )
        for (start, end), mention_text in sorted_entities:
            entities.append(EntityMention(next_entity_id, i, Span(start, end), mention_text))
            span_to_id[(start, end)] = next_entity_id
            next_entity_id += 1

        for k, entry in enumerate(_optional_list(record, "RelationMentions", path)):
            rpath = f"{path}.RelationMentions[{k}]"
            if not isinstance(entry, dict):
                raise errors.SchemaError("relation mention must be an object", rpath)
            arg1 = _resolve_arg(entry, "Arg1", sent_text, span_to_id, i, rpath)
            arg2 = _resolve_arg(entry, "Arg2", sent_text, span_to_id, i, rpath)
            names = entry.get("RelationNames")
            if not isinstance(names, list) or not names:
                raise errors.SchemaError(
                    "RelationNames must be a non-empty list", f"{rpath}.RelationNames"
                )
            collected = relations.setdefault((i, arg1, arg2), [])
            for m, name in enumerate(names):
                if not isinstance(name, str) or not name.strip():
                    raise errors.SchemaError(
                        "relation name must be a non-empty string",
                        f"{rpath}.RelationNames[{m}]",
                    )
                if name not in collected:
                    collected.append(name)
                if name not in label_order:
                    label_order.append(name)

    return AnnotationSession.restore(
        sentences,
        [RelationLabel(name) for name in label_order],
        entities,
        [
            RelationMention(sid, a1, a2, tuple(names))
            for (sid, a1, a2), names in relations.items()
        ],
    )


def export_brat(session: AnnotationSession) -> tuple[str, str]:
    """Render the session as a brat standoff pair (document text, .ann text).

    The document is the sentences joined by single newlines; standoff
    offsets are character offsets into that joined document. Entities
    become `T<k>\\tEntity <start> <end>\\t<text>` lines; each (pair, label)
    becomes an `R<k>\\t<label> Arg1:T<i> Arg2:T<j>` line with the label
    sanitized to [A-Za-z0-9_].
    """
    _require_valid(session)
    doc_text = "\n".join(s.text for s in session.sentences)
    base: dict[int, int] = {}
    offset = 0
    for sentence in session.sentences:
        base[sentence.id] = offset
        offset += len(sentence.text) + 1

    t_ids: dict[int, str] = {}
    lines: list[str] = []
    ordered = sorted(
        session.entities.values(), key=lambda e: (e.sentence_id, e.span.start, e.span.end)
    )
    for k, entity in enumerate(ordered, start=1):
        t_ids[entity.id] = f"T{k}"
        start = base[entity.sentence_id] + entity.span.start
        end = base[entity.sentence_id] + entity.span.end
        lines.append(f"T{k}\tEntity {start} {end}\t{entity.text}")

    by_id = {e.id: e for e in session.entities.values()}
    r_index = 1
    for sentence in session.sentences:
        rels = [r for r in session.relations.values() if r.sentence_id == sentence.id]
        rels.sort(
            key=lambda r: (
                by_id[r.arg1].span.start,
                by_id[r.arg2].span.start,
                by_id[r.arg1].text,
                by_id[r.arg2].text,
            )
        )
        for relation in rels:
            for name in relation.relation_names:
                label = _BRAT_LABEL_SAFE.sub("_", name)
                lines.append(
                    f"R{r_index}\t{label} Arg1:{t_ids[relation.arg1]} Arg2:{t_ids[relation.arg2]}"
                )
                r_index += 1

    ann_text = "\n".join(lines) + "\n" if lines else ""
    return doc_text, ann_text


def _require_valid(session: AnnotationSession) -> None:
    problems = [f for f in validate_session(session) if f.severity == ERROR]
    if problems:
        raise errors.InvalidSession(problems)


def _required_str(obj: dict, field: str, path: str) -> str:
    if field not in obj:
        raise errors.SchemaError(f"missing required field {field!r}", f"{path}.{field}")
    value = obj[field]
    if not isinstance(value, str) or not value:
        raise errors.SchemaError(f"{field} must be a non-empty string", f"{path}.{field}")
    return value


def _optional_list(obj: dict, field: str, path: str) -> list:
    value = obj.get(field, [])
    if not isinstance(value, list):
        raise errors.SchemaError(f"{field} must be a list", f"{path}.{field}")
    return value


def _offset(value, field: str, path: str):
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise errors.SchemaError(f"{field} must be an integer", f"{path}.{field}")
    return value


def _bind_span(
    sent_text: str, mention_text: str, raw_start, raw_end, record_index: int, path: str
) -> tuple[int, int]:
    """Resolve a mention to a concrete span, checking it against the sentence."""
    start = _offset(raw_start, "Start", path)
    end = _offset(raw_end, "End", path)
    if start is None:
        found = sent_text.find(mention_text)
        if found < 0:
            raise errors.SpanMismatch(
                f"text {mention_text!r} does not occur in the sentence ({path})", record_index
            )
        return found, found + len(mention_text)
    if end is None:
        end = start + len(mention_text)
    if not (0 <= start < end <= len(sent_text)):
        raise errors.SpanMismatch(
            f"offsets ({start}, {end}) are out of bounds for a "
            f"{len(sent_text)}-character sentence ({path})",
            record_index,
        )
    if sent_text[start:end] != mention_text:
        raise errors.SpanMismatch(
            f"text {mention_text!r} does not equal slice ({start}, {end}) "
            f"{sent_text[start:end]!r} ({path})",
            record_index,
        )
    return start, end


def _resolve_arg(
    entry: dict,
    prefix: str,
    sent_text: str,
    span_to_id: dict[tuple[int, int], int],
    record_index: int,
    path: str,
) -> int:
    """Map Arg1/Arg2 fields to a live entity id of the current record.

    With offsets, the denoted span must belong to an entity mention of
    the record. Without offsets, the text binds to the first entity (in
    span order) carrying exactly that text, which stays usable even when
    the text's first occurrence in the sentence was not annotated.
    """
    arg_text = _required_str(entry, f"{prefix}Text", path)
    raw_start = entry.get(f"{prefix}Start")
    if raw_start is None:
        for (start, end), entity_id in sorted(span_to_id.items()):
            if sent_text[start:end] == arg_text:
                return entity_id
        raise errors.SpanMismatch(
            f"{prefix}Text {arg_text!r} does not match any entity mention ({path})",
            record_index,
        )
    start = _offset(raw_start, f"{prefix}Start", path)
    end = start + len(arg_text)
    if not (0 <= start < end <= len(sent_text)) or sent_text[start:end] != arg_text:
        raise errors.SpanMismatch(
            f"{prefix}Text {arg_text!r} does not equal the slice at offset {start} ({path})",
            record_index,
        )
    entity_id = span_to_id.get((start, end))
    if entity_id is None:
        raise errors.SpanMismatch(
            f"{prefix} span ({start}, {end}) is not an annotated entity mention ({path})",
            record_index,
        )
    return entity_id
