from sociolect.models.checkpoint import load_checkpoint, save_checkpoint
from sociolect.models.cnn import cnn_forward, cnn_predict, cnn_predict_classes, cnn_train
from sociolect.models.gradcheck import gradient_check
from sociolect.models.logreg import lr_predict, lr_predict_classes, lr_train

__all__ = [
    "cnn_forward",
    "cnn_predict",
    "cnn_predict_classes",
    "cnn_train",
    "gradient_check",
    "load_checkpoint",
    "lr_predict",
    "lr_predict_classes",
    "lr_train",
    "save_checkpoint",
]
