/**
 * In-memory annotation session: sentences, relation label set, entity
 * spans, directed pair relations. All offsets count Unicode scalar
 * values. Every mutating call commits synchronously; there is no save
 * step and no network anywhere.
 */

import {
  DuplicateSpan,
  EmptyInput,
  OutOfBounds,
  SelfPair,
  UnknownEntity,
  UnknownLabel,
  UnknownSentence,
} from "./errors";
import { scalarLength, scalarSlice } from "./scalar";

export interface Span {
  readonly start: number;
  readonly end: number;
}

export interface Sentence {
  readonly id: number;
  readonly text: string;
}

export interface EntityMention {
  readonly id: number;
  readonly sentenceId: number;
  readonly span: Span;
  readonly text: string;
}

export interface RelationMention {
  readonly sentenceId: number;
  readonly arg1: number;
  readonly arg2: number;
  readonly relationNames: readonly string[];
}

export function spanText(sentence: Sentence, span: Span): string {
  const length = scalarLength(sentence.text);
  if (span.start < 0 || span.start >= span.end || span.end > length) {
    throw new OutOfBounds(
      `span (${span.start}, ${span.end}) is not a valid slice of a ${length}-character sentence`,
    );
  }
  return scalarSlice(sentence.text, span.start, span.end);
}

const pairKey = (sentenceId: number, arg1: number, arg2: number) =>
  `${sentenceId}:${arg1}:${arg2}`;

export class AnnotationSession {
  sentences: Sentence[] = [];
  labels: string[] = [];
  entities = new Map<number, EntityMention>();
  relations = new Map<string, RelationMention>();
  private labelSet = new Set<string>();
  private spanSet = new Set<string>();
  private nextEntityId = 0;

  ingestSentences(raw: string): number {
    const texts = raw
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0);
    if (texts.length === 0) throw new EmptyInput("no non-blank sentence line in input");
    for (const text of texts) {
      this.sentences.push({ id: this.sentences.length, text });
    }
    return texts.length;
  }

  ingestLabels(raw: string): number {
    const names = raw
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0);
    if (names.length === 0) throw new EmptyInput("no non-blank relation line in input");
    let added = 0;
    for (const name of names) {
      if (!this.labelSet.has(name)) {
        this.labels.push(name);
        this.labelSet.add(name);
        added += 1;
      }
    }
    return added;
  }

  addEntity(sentenceId: number, span: Span): number {
    const sentence = this.sentence(sentenceId);
    const text = spanText(sentence, span);
    const key = `${sentenceId}:${span.start}:${span.end}`;
    if (this.spanSet.has(key)) {
      throw new DuplicateSpan(
        `span (${span.start}, ${span.end}) of sentence ${sentenceId} is already annotated`,
      );
    }
    const id = this.nextEntityId;
    this.nextEntityId += 1;
    this.entities.set(id, { id, sentenceId, span, text });
    this.spanSet.add(key);
    return id;
  }

  deleteEntity(entityId: number): number {
    const entity = this.entities.get(entityId);
    if (!entity) throw new UnknownEntity(`no entity with id ${entityId}`);
    const doomed: string[] = [];
    for (const [key, relation] of this.relations) {
      if (relation.arg1 === entityId || relation.arg2 === entityId) doomed.push(key);
    }
    for (const key of doomed) this.relations.delete(key);
    this.entities.delete(entityId);
    this.spanSet.delete(`${entity.sentenceId}:${entity.span.start}:${entity.span.end}`);
    return doomed.length;
  }

  entityPairs(sentenceId: number): Array<[number, number]> {
    this.sentence(sentenceId);
    const ids = [...this.entities.values()]
      .filter((e) => e.sentenceId === sentenceId)
      .map((e) => e.id)
      .sort((a, b) => a - b);
    const pairs: Array<[number, number]> = [];
    for (const a of ids) for (const b of ids) if (a !== b) pairs.push([a, b]);
    return pairs;
  }

  setRelation(
    sentenceId: number,
    arg1: number,
    arg2: number,
    labelName: string,
    on: boolean,
  ): readonly string[] {
    for (const arg of [arg1, arg2]) {
      const entity = this.entities.get(arg);
      if (!entity || entity.sentenceId !== sentenceId) {
        throw new UnknownEntity(`entity ${arg} is not a live entity of sentence ${sentenceId}`);
      }
    }
    if (arg1 === arg2) throw new SelfPair("relation arguments must be two distinct entities");
    if (!this.labelSet.has(labelName)) {
      throw new UnknownLabel(`label "${labelName}" is not in the session label set`);
    }
    const key = pairKey(sentenceId, arg1, arg2);
    const current = this.relations.get(key);
    const names = current ? [...current.relationNames] : [];
    if (on) {
      if (!names.includes(labelName)) {
        names.push(labelName);
        this.relations.set(key, { sentenceId, arg1, arg2, relationNames: names });
      }
    } else if (names.includes(labelName)) {
      names.splice(names.indexOf(labelName), 1);
      if (names.length > 0) {
        this.relations.set(key, { sentenceId, arg1, arg2, relationNames: names });
      } else {
        this.relations.delete(key);
      }
    }
    return names;
  }

  relationNamesFor(sentenceId: number, arg1: number, arg2: number): readonly string[] {
    return this.relations.get(pairKey(sentenceId, arg1, arg2))?.relationNames ?? [];
  }

  searchLabels(query: string): string[] {
    const q = query.toLowerCase();
    return this.labels.filter((name) => name.toLowerCase().includes(q));
  }

  reset(): void {
    this.sentences = [];
    this.labels = [];
    this.entities.clear();
    this.relations.clear();
    this.labelSet.clear();
    this.spanSet.clear();
    this.nextEntityId = 0;
  }

  isEmpty(): boolean {
    return this.sentences.length === 0 && this.labels.length === 0;
  }

  entitiesOf(sentenceId: number): EntityMention[] {
    return [...this.entities.values()]
      .filter((e) => e.sentenceId === sentenceId)
      .sort((a, b) => a.span.start - b.span.start || a.span.end - b.span.end);
  }

  private sentence(sentenceId: number): Sentence {
    if (sentenceId >= 0 && sentenceId < this.sentences.length) {
      return this.sentences[sentenceId];
    }
    throw new UnknownSentence(`no sentence with id ${sentenceId}`);
  }
}
