/** Engine errors; the UI surfaces every one of these as a toast. */

export class AnnotationError extends Error {
  constructor(message: string) {
    super(message);
    this.name = new.target.name;
  }
}

export class OutOfBounds extends AnnotationError {}
export class EmptyInput extends AnnotationError {}
export class UnknownSentence extends AnnotationError {}
export class UnknownEntity extends AnnotationError {}
export class UnknownLabel extends AnnotationError {}
export class DuplicateSpan extends AnnotationError {}
export class SelfPair extends AnnotationError {}
