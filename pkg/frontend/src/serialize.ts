/**
 * Canonical JSON export: one record per sentence, fixed key order,
 * 2-space indent, entities sorted by offsets, relation mentions sorted
 * by (Arg1Start, Arg2Start, Arg1Text, Arg2Text). Byte-compatible with
 * the core toolkit's export (pinned by golden-fixture tests), so output
 * copied from the page feeds straight into the headless CLI.
 */

import type { AnnotationSession } from "./engine";
import { compareScalar } from "./scalar";

interface EntityRecord {
  Text: string;
  Start: number;
  End: number;
}

interface RelationRecord {
  Arg1Text: string;
  Arg1Start: number;
  Arg2Text: string;
  Arg2Start: number;
  RelationNames: string[];
}

interface SentenceRecord {
  SentText: string;
  EntityMentions: EntityRecord[];
  RelationMentions: RelationRecord[];
}

export function exportSession(session: AnnotationSession): string {
  const records: SentenceRecord[] = session.sentences.map((sentence) => {
    const entities = session.entitiesOf(sentence.id);
    const byId = new Map(entities.map((e) => [e.id, e]));
    const relations = [...session.relations.values()]
      .filter((r) => r.sentenceId === sentence.id)
      .sort((a, b) => {
        const a1 = byId.get(a.arg1)!;
        const a2 = byId.get(a.arg2)!;
        const b1 = byId.get(b.arg1)!;
        const b2 = byId.get(b.arg2)!;
        return (
          a1.span.start - b1.span.start ||
          a2.span.start - b2.span.start ||
          compareScalar(a1.text, b1.text) ||
          compareScalar(a2.text, b2.text)
        );
      });
    return {
      SentText: sentence.text,
      EntityMentions: entities.map((e) => ({
        Text: e.text,
        Start: e.span.start,
        End: e.span.end,
      })),
      RelationMentions: relations.map((r) => ({
        Arg1Text: byId.get(r.arg1)!.text,
        Arg1Start: byId.get(r.arg1)!.span.start,
        Arg2Text: byId.get(r.arg2)!.text,
        Arg2Start: byId.get(r.arg2)!.span.start,
        RelationNames: [...r.relationNames],
      })),
    };
  });
  return JSON.stringify(records, null, 2);
}
